#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mlexp/types.hpp"

namespace mlexp {

// One (x, x0) comparison of the power series against the exponential
// representation. ok == false marks a row whose evaluation threw or failed
// to converge; such rows keep zeroed values and errors.
struct DiscrepancyRow {
  double x = 0.0;
  double x0 = 0.0;
  ComplexScalar series_value{0.0, 0.0};
  ComplexScalar repr_value{0.0, 0.0};
  double abs_err = 0.0;
  double rel_err = 0.0;
  bool ok = false;
};

// Output of run_study. estimated_order is absent when fewer than three rows
// carry usable (above noise floor, ok) errors. monotone reports strict
// decrease of abs_err as x0 shrinks across all rows.
struct StudyReport {
  std::vector<DiscrepancyRow> rows;
  std::optional<double> estimated_order;
  bool monotone = false;
};

// Cross-tabulates h_series against h_exp over xs x x0s. Rows are emitted
// grouped by x in input order, x0 in descending order within each group.
// Requires every x0 > 0 and min(xs) >= max(x0s); individual evaluation
// failures flag the row instead of aborting.
std::vector<DiscrepancyRow> discrepancy_table(int n, ComplexScalar rho,
                                              std::span<const double> xs,
                                              std::span<const double> x0s,
                                              const TruncationPolicy& policy = {});

// Least-squares slope of ln(abs_err) against ln(x0). Requires at least three
// rows, all with the same x, strictly decreasing x0 and positive abs_err.
double convergence_order(std::span<const DiscrepancyRow> rows);

// |sequential_deriv - lambda * h_series| / max(|lambda * h_series|, 1), the
// eigen-relation defect at one point. lambda must be nonzero.
double eigen_residual(double x, ComplexScalar lambda,
                      const RationalOrder& order,
                      const TruncationPolicy& policy = {});

// |h_exp - e^{lambda x}| / |e^{lambda x}| at order 1 (n = m = 1), where the
// representation is exact for every x0; measures pure numerical error.
double alpha_one_check(double x, double x0, ComplexScalar lambda,
                       const TruncationPolicy& policy = {});

// Runs discrepancy_table at a single x over a descending x0 sweep, then fits
// the convergence order. Rows with abs_err at the numerical noise floor
// (below 100 * (rel_tol * |series| + abs_tol)) or not ok are excluded from
// the fit; the fit needs three surviving rows, else estimated_order is empty.
StudyReport run_study(int n, ComplexScalar rho, double x,
                      std::span<const double> x0s,
                      const TruncationPolicy& policy = {});

}  // namespace mlexp
