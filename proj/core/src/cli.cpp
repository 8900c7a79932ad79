#include "mlexp/cli.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mlexp/analysis.hpp"
#include "mlexp/errors.hpp"
#include "mlexp/exp_repr.hpp"
#include "mlexp/series.hpp"
#include "mlexp/special.hpp"
#include "mlexp/validation.hpp"

namespace mlexp::cli {

namespace {

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return std::string(buf);
}

std::string fmt_complex(ComplexScalar v) {
  if (v.imag() == 0.0) {
    return fmt_double(v.real());
  }
  std::string s = fmt_double(v.real());
  s += v.imag() < 0.0 ? " - " : " + ";
  s += fmt_double(std::abs(v.imag()));
  s += "i";
  return s;
}

const char* method_name(Method m) {
  switch (m) {
    case Method::series: return "series";
    case Method::decomposition: return "decomposition";
    case Method::repr: return "repr";
  }
  return "?";
}

double parse_double_token(const std::string& token, const char* what) {
  if (token.empty()) {
    throw UsageError(std::string(what) + ": empty number");
  }
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(token.c_str(), &end);
  if (end != token.c_str() + token.size() || !std::isfinite(v)) {
    throw UsageError(std::string(what) + ": not a number: '" + token + "'");
  }
  return v;
}

GridSpec parse_grid(const std::string& text) {
  GridSpec grid;
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, ':')) {
    parts.push_back(part);
  }
  if (parts.size() != 3) {
    throw UsageError("--grid: expected start:end:points, got '" + text + "'");
  }
  grid.start = parse_double_token(parts[0], "--grid start");
  grid.end = parse_double_token(parts[1], "--grid end");
  errno = 0;
  char* end = nullptr;
  grid.points = std::strtol(parts[2].c_str(), &end, 10);
  if (end != parts[2].c_str() + parts[2].size() || errno == ERANGE) {
    throw UsageError("--grid points: not an integer: '" + parts[2] + "'");
  }
  if (!(grid.start > 0.0)) {
    throw UsageError("--grid: start must be > 0");
  }
  if (!(grid.start < grid.end)) {
    throw UsageError("--grid: start must be below end");
  }
  if (grid.points < 2 || grid.points > 1000000) {
    throw UsageError("--grid: points must lie in [2, 1000000]");
  }
  return grid;
}

}  // namespace

ComplexScalar parse_complex(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      s += c;
    }
  }
  if (s.empty()) {
    throw UsageError("empty complex literal");
  }
  if (s.back() == 'i' || s.back() == 'I') {
    std::string body = s.substr(0, s.size() - 1);
    size_t split = std::string::npos;
    for (size_t p = 1; p < body.size(); ++p) {
      if ((body[p] == '+' || body[p] == '-') && body[p - 1] != 'e' &&
          body[p - 1] != 'E') {
        split = p;
      }
    }
    if (split == std::string::npos) {
      return {0.0, parse_double_token(body, "complex imaginary part")};
    }
    return {parse_double_token(body.substr(0, split), "complex real part"),
            parse_double_token(body.substr(split), "complex imaginary part")};
  }
  return {parse_double_token(s, "complex value"), 0.0};
}

CliRequest parse_args(const std::vector<std::string>& argv) {
  CliRequest req;
  int n = 1;
  int m = 1;
  double x = 0.0;
  double x0 = 0.0;
  double rel_tol = 0.0;
  int max_terms = 0;
  std::string lambda_text, rho_text, grid_text;
  std::string method_text = "series";
  std::string format_text = "text";

  CLI::App app{"shifted Mittag-Leffler function of rational order: power series "
               "and exponential-representation evaluators",
               "mlexp"};
  app.require_subcommand(1);

  std::vector<CLI::Option*> rel_tol_opts;
  std::vector<CLI::Option*> max_terms_opts;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_text, "output format: text, csv or json");
    cmd->add_option("--out", req.out_path, "write output to this file");
    rel_tol_opts.push_back(cmd->add_option(
        "--rel-tol", rel_tol, "series truncation relative tolerance"));
    max_terms_opts.push_back(
        cmd->add_option("--max-terms", max_terms, "series term cap"));
  };
  auto opt_given = [](const std::vector<CLI::Option*>& opts) {
    for (const CLI::Option* opt : opts) {
      if (opt->count() > 0) {
        return true;
      }
    }
    return false;
  };
  auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("--n", n, "order denominator; the order is m/n");
    cmd->add_option("--m", m, "order numerator");
    cmd->add_option("--lambda", lambda_text,
                    "eigenvalue lambda = rho^m, complex 'a+bi' accepted");
    cmd->add_option("--rho", rho_text,
                    "series parameter rho directly (fixes m = 1)");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate h at one point");
  add_params(eval);
  add_common(eval);
  CLI::Option* eval_x = eval->add_option("--x", x, "evaluation point, > 0");
  eval_x->required();
  CLI::Option* eval_x0 =
      eval->add_option("--x0", x0, "expansion point for --method repr");
  eval->add_option("--method", method_text, "series, decomposition or repr");

  CLI::App* table = app.add_subcommand("table", "evaluate h over a grid");
  add_params(table);
  add_common(table);
  CLI::Option* table_grid =
      table->add_option("--grid", grid_text, "grid as start:end:points");
  table_grid->required();
  CLI::Option* table_x0 =
      table->add_option("--x0", x0, "expansion point for --method repr");
  table->add_option("--method", method_text, "series, decomposition or repr");

  CLI::App* study = app.add_subcommand(
      "study", "discrepancy of the exponential representation as x0 shrinks");
  add_params(study);
  add_common(study);
  study->add_option("--x", x, "evaluation point, > 0")->required();
  study->add_option("--x0-seq", req.x0_seq, "x0 sweep, comma separated")
      ->required()
      ->delimiter(',');

  CLI::App* validate =
      app.add_subcommand("validate", "run built-in cross-validation checks");
  add_common(validate);
  validate->add_option("--suite", req.suite, "check name or 'all'");

  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (eval->parsed()) {
    req.subcommand = Subcommand::eval;
  } else if (table->parsed()) {
    req.subcommand = Subcommand::table;
  } else if (study->parsed()) {
    req.subcommand = Subcommand::study;
  } else {
    req.subcommand = Subcommand::validate;
  }

  try {
    req.order = RationalOrder(m, n);
  } catch (const DomainError& e) {
    throw UsageError(std::string("--m/--n: ") + e.what());
  }

  if (!lambda_text.empty() && !rho_text.empty()) {
    throw UsageError("--lambda and --rho are mutually exclusive");
  }
  if (!rho_text.empty()) {
    if (m != 1) {
      throw UsageError("--rho fixes m = 1; drop --m or use --lambda");
    }
    req.lambda = parse_complex(rho_text);
    req.lambda_is_rho = true;
  } else if (!lambda_text.empty()) {
    req.lambda = parse_complex(lambda_text);
  }

  if (method_text == "series") {
    req.method = Method::series;
  } else if (method_text == "decomposition") {
    req.method = Method::decomposition;
  } else if (method_text == "repr") {
    req.method = Method::repr;
  } else {
    throw UsageError("--method: unknown method '" + method_text + "'");
  }

  if (format_text == "text") {
    req.format = Format::text;
  } else if (format_text == "csv") {
    req.format = Format::csv;
  } else if (format_text == "json") {
    req.format = Format::json;
  } else {
    throw UsageError("--format: unknown format '" + format_text + "'");
  }

  if (opt_given(rel_tol_opts)) {
    if (!(rel_tol > 0.0) || !std::isfinite(rel_tol)) {
      throw UsageError("--rel-tol: must be positive and finite");
    }
    req.policy.rel_tol = rel_tol;
  }
  if (opt_given(max_terms_opts)) {
    if (max_terms < 10) {
      throw UsageError("--max-terms: must be at least 10");
    }
    req.policy.max_terms = max_terms;
  }

  if (eval->parsed() || study->parsed()) {
    if (!(x > 0.0)) {
      throw UsageError("--x: must be > 0");
    }
    req.x = x;
  }
  if (*eval_x0 || (table->parsed() && *table_x0)) {
    if (!(x0 > 0.0)) {
      throw UsageError("--x0: must be > 0");
    }
    req.x0 = x0;
  }
  if (req.method == Method::repr &&
      (eval->parsed() || table->parsed()) && !req.x0) {
    throw UsageError("--method repr requires --x0");
  }
  if (eval->parsed() && req.method == Method::repr && x < *req.x0) {
    throw UsageError("--x must be >= --x0 for --method repr");
  }

  if (table->parsed()) {
    req.grid = parse_grid(grid_text);
    if (req.method == Method::repr && req.grid->start < *req.x0) {
      throw UsageError("--grid: start must be >= --x0 for --method repr");
    }
  }

  if (study->parsed()) {
    if (req.x0_seq.empty()) {
      throw UsageError("--x0-seq: needs at least one value");
    }
    for (double v : req.x0_seq) {
      if (!(v > 0.0)) {
        throw UsageError("--x0-seq: every value must be > 0");
      }
      if (v > x) {
        throw UsageError("--x0-seq: values must not exceed --x");
      }
    }
  }

  if (validate->parsed() && req.suite != "all") {
    bool known = false;
    for (const std::string& name : validation_check_names()) {
      known = known || name == req.suite;
    }
    if (!known) {
      throw UsageError("--suite: unknown check '" + req.suite +
                       "' (see validate --help)");
    }
  }

  return req;
}

namespace {

struct ValueRow {
  double x = 0.0;
  SeriesValue v{};
  bool ok = false;
  std::string error;
};

ValueRow eval_point(double x, const CliRequest& req, ComplexScalar rho) {
  ValueRow row;
  row.x = x;
  try {
    switch (req.method) {
      case Method::series:
        row.v = h_series(x, rho, req.order.n, req.policy);
        break;
      case Method::decomposition:
        row.v = h_via_decomposition(x, rho, req.order.n, req.policy);
        break;
      case Method::repr:
        row.v = h_exp(x, *req.x0, rho, req.order.n, req.policy);
        break;
    }
    row.ok = row.v.converged;
    if (!row.ok) {
      row.error = "did not converge within max_terms";
    }
  } catch (const std::exception& e) {
    row.ok = false;
    row.error = e.what();
  }
  return row;
}

void emit_rows_text(const std::vector<ValueRow>& rows, std::ostream& out) {
  for (const ValueRow& row : rows) {
    if (row.ok) {
      out << "h(" << fmt_double(row.x) << ") = " << fmt_complex(row.v.value)
          << "   terms_used: " << row.v.terms_used << "\n";
    } else {
      out << "h(" << fmt_double(row.x) << ") FAILED: " << row.error << "\n";
    }
  }
}

void emit_rows_csv(const CliRequest& req, const std::vector<ValueRow>& rows,
                   std::ostream& out) {
  out << "x,x0,n,m,lambda_re,lambda_im,method,value_re,value_im,terms_used,"
         "converged\n";
  const std::string x0_text =
      req.method == Method::repr ? fmt_double(*req.x0) : std::string();
  for (const ValueRow& row : rows) {
    out << fmt_double(row.x) << ',' << x0_text << ',' << req.order.n << ','
        << req.order.m << ',' << fmt_double(req.lambda.real()) << ','
        << fmt_double(req.lambda.imag()) << ',' << method_name(req.method)
        << ',';
    if (row.ok || row.v.terms_used > 0) {
      out << fmt_double(row.v.value.real()) << ','
          << fmt_double(row.v.value.imag());
    } else {
      out << ',';
    }
    out << ',' << row.v.terms_used << ',' << (row.ok ? "true" : "false")
        << "\n";
  }
}

nlohmann::json params_json(const CliRequest& req) {
  nlohmann::json params;
  params["n"] = req.order.n;
  params["m"] = req.order.m;
  params["lambda_re"] = req.lambda.real();
  params["lambda_im"] = req.lambda.imag();
  params["lambda_is_rho"] = req.lambda_is_rho;
  params["method"] = method_name(req.method);
  params["rel_tol"] = req.policy.rel_tol;
  params["max_terms"] = req.policy.max_terms;
  if (req.x0) {
    params["x0"] = *req.x0;
  }
  return params;
}

void emit_rows_json(const CliRequest& req, const std::vector<ValueRow>& rows,
                    std::ostream& out) {
  nlohmann::json doc;
  doc["params"] = params_json(req);
  doc["rows"] = nlohmann::json::array();
  bool all_ok = true;
  for (const ValueRow& row : rows) {
    nlohmann::json jrow;
    jrow["x"] = row.x;
    jrow["value_re"] = row.v.value.real();
    jrow["value_im"] = row.v.value.imag();
    jrow["terms_used"] = row.v.terms_used;
    jrow["converged"] = row.v.converged;
    jrow["ok"] = row.ok;
    if (!row.ok) {
      jrow["error"] = row.error;
    }
    all_ok = all_ok && row.ok;
    doc["rows"].push_back(jrow);
  }
  doc["diagnostics"]["all_ok"] = all_ok;
  out << doc.dump(2) << "\n";
}

int run_values(const CliRequest& req, std::ostream& out) {
  ComplexScalar rho = req.lambda_is_rho
                          ? req.lambda
                          : principal_root(req.lambda, req.order.m);
  std::vector<ValueRow> rows;
  if (req.subcommand == Subcommand::eval) {
    rows.push_back(eval_point(*req.x, req, rho));
  } else {
    const GridSpec& grid = *req.grid;
    rows.reserve(grid.points);
    for (long i = 0; i < grid.points; ++i) {
      double x =
          grid.start + (grid.end - grid.start) * i / (grid.points - 1.0);
      rows.push_back(eval_point(x, req, rho));
    }
  }
  switch (req.format) {
    case Format::text: emit_rows_text(rows, out); break;
    case Format::csv: emit_rows_csv(req, rows, out); break;
    case Format::json: emit_rows_json(req, rows, out); break;
  }
  for (const ValueRow& row : rows) {
    if (!row.ok) {
      return 1;
    }
  }
  return 0;
}

int run_study_cmd(const CliRequest& req, std::ostream& out, std::ostream& err) {
  ComplexScalar rho = req.lambda_is_rho
                          ? req.lambda
                          : principal_root(req.lambda, req.order.m);
  StudyReport report;
  try {
    report = run_study(req.order.n, rho, *req.x, req.x0_seq, req.policy);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  switch (req.format) {
    case Format::text: {
      out << "x0-study at x = " << fmt_double(*req.x) << ", n = " << req.order.n
          << "\n";
      out << "        x0            abs_err            rel_err  ok\n";
      for (const DiscrepancyRow& row : report.rows) {
        char line[160];
        std::snprintf(line, sizeof line, "%10.6g  %17.10g  %17.10g  %s\n",
                      row.x0, row.abs_err, row.rel_err, row.ok ? "yes" : "NO");
        out << line;
      }
      out << "estimated_order: "
          << (report.estimated_order ? fmt_double(*report.estimated_order)
                                     : std::string("n/a"))
          << "\n";
      out << "monotone_decrease: " << (report.monotone ? "yes" : "no") << "\n";
      break;
    }
    case Format::csv: {
      out << "x,x0,series_re,series_im,repr_re,repr_im,abs_err,rel_err,ok\n";
      for (const DiscrepancyRow& row : report.rows) {
        out << fmt_double(row.x) << ',' << fmt_double(row.x0) << ','
            << fmt_double(row.series_value.real()) << ','
            << fmt_double(row.series_value.imag()) << ','
            << fmt_double(row.repr_value.real()) << ','
            << fmt_double(row.repr_value.imag()) << ','
            << fmt_double(row.abs_err) << ',' << fmt_double(row.rel_err) << ','
            << (row.ok ? "true" : "false") << "\n";
      }
      err << "# estimated_order="
          << (report.estimated_order ? fmt_double(*report.estimated_order)
                                     : std::string("n/a"))
          << " monotone=" << (report.monotone ? "true" : "false") << "\n";
      break;
    }
    case Format::json: {
      nlohmann::json doc;
      doc["params"] = params_json(req);
      doc["params"]["x"] = *req.x;
      doc["rows"] = nlohmann::json::array();
      for (const DiscrepancyRow& row : report.rows) {
        nlohmann::json jrow;
        jrow["x"] = row.x;
        jrow["x0"] = row.x0;
        jrow["series_re"] = row.series_value.real();
        jrow["series_im"] = row.series_value.imag();
        jrow["repr_re"] = row.repr_value.real();
        jrow["repr_im"] = row.repr_value.imag();
        jrow["abs_err"] = row.abs_err;
        jrow["rel_err"] = row.rel_err;
        jrow["ok"] = row.ok;
        doc["rows"].push_back(jrow);
      }
      if (report.estimated_order) {
        doc["diagnostics"]["estimated_order"] = *report.estimated_order;
      } else {
        doc["diagnostics"]["estimated_order"] = nullptr;
      }
      doc["diagnostics"]["monotone_decrease"] = report.monotone;
      out << doc.dump(2) << "\n";
      break;
    }
  }
  for (const DiscrepancyRow& row : report.rows) {
    if (!row.ok) {
      return 1;
    }
  }
  return 0;
}

int run_validate(const CliRequest& req, std::ostream& out) {
  std::vector<CheckResult> results = run_validation_suite(req.suite, req.policy);
  bool all_passed = true;
  for (const CheckResult& r : results) {
    all_passed = all_passed && r.passed;
  }
  switch (req.format) {
    case Format::text: {
      for (const CheckResult& r : results) {
        char line[256];
        std::snprintf(line, sizeof line,
                      "%s  %-24s worst %.3e  threshold %.3e  (%.3fs)%s%s\n",
                      r.passed ? "PASS" : "FAIL", r.name.c_str(), r.worst,
                      r.threshold, r.elapsed_seconds,
                      r.detail.empty() ? "" : "  ",
                      r.detail.c_str());
        out << line;
      }
      out << (all_passed ? "all checks passed" : "CHECKS FAILED") << " ("
          << results.size() << " run)\n";
      break;
    }
    case Format::csv: {
      out << "name,passed,worst,threshold,elapsed_seconds\n";
      for (const CheckResult& r : results) {
        out << r.name << ',' << (r.passed ? "true" : "false") << ','
            << fmt_double(r.worst) << ',' << fmt_double(r.threshold) << ','
            << fmt_double(r.elapsed_seconds) << "\n";
      }
      break;
    }
    case Format::json: {
      nlohmann::json doc;
      doc["params"]["suite"] = req.suite;
      doc["rows"] = nlohmann::json::array();
      for (const CheckResult& r : results) {
        nlohmann::json jrow;
        jrow["name"] = r.name;
        jrow["passed"] = r.passed;
        jrow["worst"] = r.worst;
        jrow["threshold"] = r.threshold;
        jrow["elapsed_seconds"] = r.elapsed_seconds;
        jrow["detail"] = r.detail;
        doc["rows"].push_back(jrow);
      }
      doc["diagnostics"]["all_passed"] = all_passed;
      out << doc.dump(2) << "\n";
      break;
    }
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int run(const CliRequest& req, std::ostream& out, std::ostream& err) {
  try {
    switch (req.subcommand) {
      case Subcommand::eval:
      case Subcommand::table:
        return run_values(req, out);
      case Subcommand::study:
        return run_study_cmd(req, out, err);
      case Subcommand::validate:
        return run_validate(req, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

int main_entry(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  CliRequest req;
  try {
    req = parse_args(args);
  } catch (const HelpRequested& help) {
    std::cout << help.text;
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n"
              << "run 'mlexp --help' for usage\n";
    return 2;
  }

  std::ofstream file_out;
  std::ostream* out = &std::cout;
  if (!req.out_path.empty()) {
    file_out.open(req.out_path);
    if (!file_out) {
      std::cerr << "error: cannot open output file '" << req.out_path << "'\n";
      return 1;
    }
    out = &file_out;
  }
  return run(req, *out, std::cerr);
}

}  // namespace mlexp::cli
