#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mlexp/types.hpp"

namespace mlexp::cli {

enum class Subcommand { eval, table, validate, study };
enum class Method { series, decomposition, repr };
enum class Format { text, csv, json };

// Inclusive linear grid start..end with `points` samples.
struct GridSpec {
  double start = 0.0;
  double end = 0.0;
  long points = 0;
};

// Fully validated invocation. lambda holds the parameter as given: when
// lambda_is_rho is set it is rho itself (and order.m == 1), otherwise the
// eigenvalue whose principal order.m-th root supplies rho.
struct CliRequest {
  Subcommand subcommand = Subcommand::eval;
  RationalOrder order{};
  ComplexScalar lambda{1.0, 0.0};
  bool lambda_is_rho = false;
  std::optional<double> x;
  std::optional<GridSpec> grid;
  std::optional<double> x0;
  std::vector<double> x0_seq;
  Method method = Method::series;
  Format format = Format::text;
  std::string out_path;  // empty: stdout
  std::string suite = "all";
  TruncationPolicy policy{};
};

// Thrown by parse_args on --help; carries the text to print. Exit code 0.
struct HelpRequested {
  std::string text;
};

// Complex literal: "1", "-0.7", "2.5e-1", "1+0.5i", "1-2i", "0.5i". The
// imaginary part needs explicit digits ("1+i" is rejected). Throws
// UsageError on anything else.
ComplexScalar parse_complex(const std::string& text);

// argv without the program name, e.g. {"eval", "--n", "2", "--x", "4"}.
// Throws UsageError (malformed invocation) or HelpRequested.
CliRequest parse_args(const std::vector<std::string>& argv);

// Executes a parsed request, writing results to out and failure notes to
// err. Returns the process exit code: 0 success, 1 numerical or validation
// failure. Never throws UsageError for a request that parse_args accepted.
int run(const CliRequest& request, std::ostream& out, std::ostream& err);

// main() adapter: parse, dispatch, map UsageError to exit code 2.
int main_entry(int argc, char** argv);

}  // namespace mlexp::cli
