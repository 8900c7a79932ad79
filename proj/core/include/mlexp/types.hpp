#pragma once

#include <complex>

namespace mlexp {

using ComplexScalar = std::complex<double>;

// Reduced fraction m/n with 1 <= m <= n; alpha = m/n lies in (0, 1].
struct RationalOrder {
  int m = 1;
  int n = 1;

  RationalOrder() = default;
  RationalOrder(int m_, int n_);  // throws DomainError unless reduced and 1 <= m <= n

  double alpha() const { return static_cast<double>(m) / n; }
};

// Truncation control shared by every series evaluator. A tail is accepted
// once consecutive_below successive terms satisfy
// |term| <= rel_tol * |partial_sum| + abs_tol.
struct TruncationPolicy {
  double rel_tol = 1e-14;
  double abs_tol = 1e-300;
  int max_terms = 600;
  int consecutive_below = 3;

  void validate() const;  // throws DomainError on nonsensical settings
};

// Result of a truncated series evaluation. converged == false means the
// term cap was hit before the stopping rule fired; the partial sum is still
// returned so callers can inspect or flag it.
struct SeriesValue {
  ComplexScalar value{0.0, 0.0};
  int terms_used = 0;
  double last_term_mag = 0.0;
  bool converged = false;
};

}  // namespace mlexp
