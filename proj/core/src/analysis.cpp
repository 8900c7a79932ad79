#include "mlexp/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "mlexp/errors.hpp"
#include "mlexp/exp_repr.hpp"
#include "mlexp/frac_ops.hpp"
#include "mlexp/series.hpp"
#include "mlexp/special.hpp"

namespace mlexp {

std::vector<DiscrepancyRow> discrepancy_table(int n, ComplexScalar rho,
                                              std::span<const double> xs,
                                              std::span<const double> x0s,
                                              const TruncationPolicy& policy) {
  if (xs.empty() || x0s.empty()) {
    throw DomainError("discrepancy_table: xs and x0s must be non-empty");
  }
  for (double x0 : x0s) {
    if (!(x0 > 0.0)) {
      throw DomainError("discrepancy_table: every x0 must be > 0");
    }
  }
  const double min_x = *std::min_element(xs.begin(), xs.end());
  const double max_x0 = *std::max_element(x0s.begin(), x0s.end());
  if (min_x < max_x0) {
    throw DomainError("discrepancy_table: requires min(xs) >= max(x0s)");
  }

  std::vector<double> x0_desc(x0s.begin(), x0s.end());
  std::sort(x0_desc.begin(), x0_desc.end(), std::greater<>());

  std::vector<DiscrepancyRow> rows;
  rows.reserve(xs.size() * x0_desc.size());
  for (double x : xs) {
    SeriesValue series{};
    bool series_ok = true;
    try {
      series = h_series(x, rho, n, policy);
      series_ok = series.converged;
    } catch (const DomainError&) {
      series_ok = false;
    } catch (const OverflowError&) {
      series_ok = false;
    }
    for (double x0 : x0_desc) {
      DiscrepancyRow row;
      row.x = x;
      row.x0 = x0;
      if (series_ok) {
        try {
          SeriesValue repr = h_exp(x, x0, rho, n, policy);
          if (repr.converged) {
            row.series_value = series.value;
            row.repr_value = repr.value;
            row.abs_err = std::abs(repr.value - series.value);
            row.rel_err =
                row.abs_err / std::max(std::abs(series.value), 1e-300);
            row.ok = true;
          }
        } catch (const DomainError&) {
        } catch (const OverflowError&) {
        }
      }
      rows.push_back(row);
    }
  }
  return rows;
}

double convergence_order(std::span<const DiscrepancyRow> rows) {
  if (rows.size() < 3) {
    throw DomainError("convergence_order: needs at least three rows");
  }
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].x != rows[0].x) {
      throw DomainError("convergence_order: rows must share one x");
    }
    if (!(rows[i].abs_err > 0.0)) {
      throw DomainError("convergence_order: abs_err must be positive");
    }
    if (i > 0 && !(rows[i].x0 < rows[i - 1].x0)) {
      throw DomainError("convergence_order: x0 must strictly decrease");
    }
  }
  // least squares of ln(err) on ln(x0)
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double count = static_cast<double>(rows.size());
  for (const DiscrepancyRow& row : rows) {
    double lx = std::log(row.x0);
    double ly = std::log(row.abs_err);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

double eigen_residual(double x, ComplexScalar lambda,
                      const RationalOrder& order,
                      const TruncationPolicy& policy) {
  if (std::abs(lambda) == 0.0) {
    throw DomainError("eigen_residual: lambda must be nonzero");
  }
  ComplexScalar rho = principal_root(lambda, order.m);
  ComplexScalar lhs = sequential_deriv(x, lambda, order, policy).value;
  ComplexScalar rhs = lambda * h_series(x, rho, order.n, policy).value;
  return std::abs(lhs - rhs) / std::max(std::abs(rhs), 1.0);
}

double alpha_one_check(double x, double x0, ComplexScalar lambda,
                       const TruncationPolicy& policy) {
  ComplexScalar repr = h_exp(x, x0, lambda, 1, policy).value;
  ComplexScalar exact = complex_exp(lambda * x);
  return std::abs(repr - exact) / std::abs(exact);
}

StudyReport run_study(int n, ComplexScalar rho, double x,
                      std::span<const double> x0s,
                      const TruncationPolicy& policy) {
  StudyReport report;
  const double xs[1] = {x};
  report.rows = discrepancy_table(n, rho, xs, x0s, policy);

  report.monotone = true;
  for (size_t i = 0; i < report.rows.size(); ++i) {
    if (!report.rows[i].ok ||
        (i > 0 && !(report.rows[i].abs_err < report.rows[i - 1].abs_err))) {
      report.monotone = false;
    }
  }

  std::vector<DiscrepancyRow> usable;
  for (const DiscrepancyRow& row : report.rows) {
    double floor =
        100.0 * (policy.rel_tol * std::abs(row.series_value) + policy.abs_tol);
    if (row.ok && row.abs_err > floor) {
      usable.push_back(row);
    }
  }
  if (usable.size() >= 3) {
    report.estimated_order = convergence_order(usable);
  }
  return report;
}

}  // namespace mlexp
