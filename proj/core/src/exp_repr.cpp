#include "mlexp/exp_repr.hpp"

#include <cmath>
#include <string>

#include "mlexp/errors.hpp"
#include "mlexp/special.hpp"
#include "series_sum.hpp"

namespace mlexp {

namespace {

void check_repr_args(int s, double x, double x0, int n, const char* who) {
  if (n < 1) {
    throw DomainError(std::string(who) + ": n must be >= 1");
  }
  if (s < 0 || s >= n) {
    throw DomainError(std::string(who) + ": s must lie in [0, n-1]");
  }
  if (!(x0 > 0.0)) {
    throw DomainError(std::string(who) + ": requires x0 > 0");
  }
  if (!(x >= x0)) {
    throw DomainError(std::string(who) + ": requires x >= x0");
  }
}

// inner alternating sum  sum_k (-1)^k/k! a^k d^{mu+k}/(mu+k), d = x - x0 > 0
SeriesValue repr_inner_sum(ComplexScalar a, double d, double mu,
                           const TruncationPolicy& policy) {
  const double log_d = std::log(d);
  detail::LogScaledPower a_pow(a);
  return detail::sum_series(policy, [&](int k) {
    if (k > 0) a_pow.step();
    double sgn = (k % 2 == 0) ? 1.0 : -1.0;
    return sgn * a_pow.value((mu + k) * log_d - log_gamma(k + 1.0)) / (mu + k);
  });
}

}  // namespace

ComplexScalar homogeneous_term(int s, double x, double x0, ComplexScalar rho,
                               int n) {
  check_repr_args(s, x, x0, n, "homogeneous_term");
  const double mu = (s + 1.0) / n;
  const ComplexScalar a = complex_ipow(rho, n);
  return complex_exp(a * x0) * std::exp((mu - 1.0) * std::log(x)) *
         recip_gamma(mu);
}

SeriesValue j_exp(int s, double x, double x0, ComplexScalar rho, int n,
                  const TruncationPolicy& policy) {
  check_repr_args(s, x, x0, n, "j_exp");
  const double mu = (s + 1.0) / n;
  const ComplexScalar a = complex_ipow(rho, n);
  const ComplexScalar homog = homogeneous_term(s, x, x0, rho, n);
  const double d = x - x0;
  if (std::abs(a) == 0.0 || d == 0.0) {
    // integral part carries a factor a and a weight supported on (x0, x)
    return SeriesValue{homog, 0, 0.0, true};
  }
  SeriesValue inner = repr_inner_sum(a, d, mu, policy);
  const ComplexScalar pre = a * complex_exp(a * x) * recip_gamma(mu);
  SeriesValue out;
  out.value = pre * inner.value + homog;
  out.terms_used = inner.terms_used;
  out.last_term_mag = std::abs(pre) * inner.last_term_mag;
  out.converged = inner.converged;
  if (!std::isfinite(out.value.real()) || !std::isfinite(out.value.imag())) {
    throw OverflowError("j_exp: value overflowed double range");
  }
  return out;
}

SeriesValue h_exp(double x, double x0, ComplexScalar rho, int n,
                  const TruncationPolicy& policy) {
  check_repr_args(0, x, x0, n, "h_exp");
  ComplexScalar weight{1.0, 0.0};  // rho^s
  SeriesValue out;
  out.converged = true;
  for (int s = 0; s < n; ++s) {
    SeriesValue js = j_exp(s, x, x0, rho, n, policy);
    out.value += weight * js.value;
    out.terms_used += js.terms_used;
    out.last_term_mag =
        std::max(out.last_term_mag, std::abs(weight) * js.last_term_mag);
    out.converged = out.converged && js.converged;
    weight *= rho;
  }
  if (!std::isfinite(out.value.real()) || !std::isfinite(out.value.imag())) {
    throw OverflowError("h_exp: sum overflowed double range");
  }
  return out;
}

SeriesValue h_exp_lambda(double x, double x0, ComplexScalar lambda,
                         const RationalOrder& order,
                         const TruncationPolicy& policy) {
  return h_exp(x, x0, principal_root(lambda, order.m), order.n, policy);
}

SeriesValue h_exp_lambda(double x, const ReprParams& params) {
  return h_exp_lambda(x, params.x0, params.lambda, params.order, params.policy);
}

SeriesValue h_exp_lambda_direct(double x, double x0, ComplexScalar lambda,
                                const RationalOrder& order,
                                const TruncationPolicy& policy) {
  const int m = order.m;
  const int n = order.n;
  check_repr_args(0, x, x0, n, "h_exp_lambda_direct");

  const bool lambda_zero = (std::abs(lambda) == 0.0);
  ComplexScalar log_lambda{0.0, 0.0};
  if (!lambda_zero) {
    if (lambda.imag() == 0.0) {
      lambda = ComplexScalar(lambda.real(), 0.0);  // Arg(-x) = +pi, as in principal_root
    }
    log_lambda = std::log(lambda);
  }
  auto lambda_pow = [&](double q) -> ComplexScalar {
    if (lambda_zero) {
      return q == 0.0 ? ComplexScalar{1.0, 0.0} : ComplexScalar{0.0, 0.0};
    }
    return complex_exp(q * log_lambda);
  };

  const ComplexScalar a = lambda_pow(static_cast<double>(n) / m);  // rho^n
  const double d = x - x0;
  SeriesValue out;
  out.converged = true;
  for (int s = 0; s < n; ++s) {
    const double mu = (s + 1.0) / n;
    const ComplexScalar homog = lambda_pow(static_cast<double>(s) / m) *
                                complex_exp(a * x0) *
                                std::exp((mu - 1.0) * std::log(x)) *
                                recip_gamma(mu);
    out.value += homog;
    if (lambda_zero || d == 0.0) {
      continue;
    }
    SeriesValue inner = repr_inner_sum(a, d, mu, policy);
    const ComplexScalar pre = lambda_pow(static_cast<double>(s + n) / m) *
                              complex_exp(a * x) * recip_gamma(mu);
    out.value += pre * inner.value;
    out.terms_used += inner.terms_used;
    out.last_term_mag =
        std::max(out.last_term_mag, std::abs(pre) * inner.last_term_mag);
    out.converged = out.converged && inner.converged;
  }
  if (!std::isfinite(out.value.real()) || !std::isfinite(out.value.imag())) {
    throw OverflowError("h_exp_lambda_direct: sum overflowed double range");
  }
  return out;
}

}  // namespace mlexp
