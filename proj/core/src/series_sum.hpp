#pragma once

#include <cmath>
#include <limits>

#include "mlexp/errors.hpp"
#include "mlexp/types.hpp"

namespace mlexp::detail {

// Tracks w^k as (unit phase, log magnitude) so large |w| and large k never
// overflow intermediates. step() advances k by one; the phase is renormalized
// to unit modulus each step to stop drift. A zero base yields w^0 = 1 and
// exactly 0 afterwards.
class LogScaledPower {
 public:
  explicit LogScaledPower(ComplexScalar base) {
    double a = std::abs(base);
    zero_base_ = (a == 0.0);
    log_step_ = zero_base_ ? 0.0 : std::log(a);
    unit_ = zero_base_ ? ComplexScalar{0.0, 0.0} : base / a;
  }

  void step() {
    if (zero_base_) {
      annihilated_ = true;
      return;
    }
    phase_ *= unit_;
    phase_ /= std::abs(phase_);
    log_mag_ += log_step_;
  }

  // w^k * exp(extra_log)
  ComplexScalar value(double extra_log) const {
    if (annihilated_) {
      return {0.0, 0.0};
    }
    return phase_ * std::exp(log_mag_ + extra_log);
  }

 private:
  ComplexScalar phase_{1.0, 0.0};
  ComplexScalar unit_{1.0, 0.0};
  double log_mag_ = 0.0;
  double log_step_ = 0.0;
  bool zero_base_ = false;
  bool annihilated_ = false;
};

// Shared summation driver. Calls term(k) for k = 0, 1, ... strictly in
// order (term may keep incremental state). Stops once policy.consecutive_below
// successive terms pass |term| <= rel_tol * |sum| + abs_tol, or flags
// NotConverged at the term cap. Throws OverflowError if the partial sum
// leaves double range.
template <class TermFn>
SeriesValue sum_series(const TruncationPolicy& policy, TermFn&& term) {
  policy.validate();
  SeriesValue out;
  ComplexScalar sum{0.0, 0.0};
  int below = 0;
  for (int k = 0; k < policy.max_terms; ++k) {
    ComplexScalar t = term(k);
    sum += t;
    out.terms_used = k + 1;
    if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag())) {
      throw OverflowError("series: partial sum overflowed double range");
    }
    out.last_term_mag = std::abs(t);
    if (out.last_term_mag <= policy.rel_tol * std::abs(sum) + policy.abs_tol) {
      if (++below >= policy.consecutive_below) {
        out.converged = true;
        break;
      }
    } else {
      below = 0;
    }
  }
  out.value = sum;
  return out;
}

}  // namespace mlexp::detail
