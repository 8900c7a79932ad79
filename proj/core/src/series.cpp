#include "mlexp/series.hpp"

#include <cmath>

#include "mlexp/errors.hpp"
#include "mlexp/special.hpp"
#include "series_sum.hpp"

namespace mlexp {

namespace {

void check_xn(double x, int n, const char* who) {
  if (n < 1) {
    throw DomainError(std::string(who) + ": n must be >= 1");
  }
  if (!(x > 0.0)) {
    throw DomainError(std::string(who) + ": requires x > 0");
  }
}

}  // namespace

SeriesValue h_series(double x, ComplexScalar rho, int n,
                     const TruncationPolicy& policy) {
  check_xn(x, n, "h_series");
  const double log_x = std::log(x);
  detail::LogScaledPower rho_pow(rho);
  return detail::sum_series(policy, [&](int k) {
    if (k > 0) rho_pow.step();
    double mu = (k + 1.0) / n;
    return rho_pow.value((mu - 1.0) * log_x - log_gamma(mu));
  });
}

SeriesValue j_series(int s, double x, ComplexScalar a, int n,
                     const TruncationPolicy& policy) {
  check_xn(x, n, "j_series");
  if (s < 0 || s >= n) {
    throw DomainError("j_series: s must lie in [0, n-1]");
  }
  const double mu = (s + 1.0) / n;
  const double log_x = std::log(x);
  detail::LogScaledPower a_pow(a);
  return detail::sum_series(policy, [&](int k) {
    if (k > 0) a_pow.step();
    return a_pow.value((k - 1.0 + mu) * log_x - log_gamma(k + mu));
  });
}

SeriesValue h_via_decomposition(double x, ComplexScalar rho, int n,
                                const TruncationPolicy& policy) {
  check_xn(x, n, "h_via_decomposition");
  const ComplexScalar a = complex_ipow(rho, n);
  ComplexScalar weight{1.0, 0.0};  // rho^s
  SeriesValue out;
  out.converged = true;
  for (int s = 0; s < n; ++s) {
    SeriesValue js = j_series(s, x, a, n, policy);
    out.value += weight * js.value;
    out.terms_used += js.terms_used;
    out.last_term_mag =
        std::max(out.last_term_mag, std::abs(weight) * js.last_term_mag);
    out.converged = out.converged && js.converged;
    weight *= rho;
  }
  if (!std::isfinite(out.value.real()) || !std::isfinite(out.value.imag())) {
    throw OverflowError("h_via_decomposition: sum overflowed double range");
  }
  return out;
}

}  // namespace mlexp
