#include "mlexp/frac_ops.hpp"

#include <cmath>
#include <string>

#include "mlexp/errors.hpp"
#include "mlexp/special.hpp"
#include "pole_window.hpp"
#include "series_sum.hpp"

namespace mlexp {

namespace {

void check_alpha(double alpha, const char* who) {
  if (!(alpha > 0.0) || alpha > 1.0) {
    throw DomainError(std::string(who) + ": alpha must lie in (0, 1]");
  }
}

// m-fold composition of the order-1/n power rule on term k of h. Returns the
// series for (D^{1/n})^m h. Terms k < m are annihilated outright (step j =
// k+1 lands on the Gamma pole at 0), and with m <= n no later term can hit a
// pole, so the sum starts at k = m; starting earlier would feed a run of
// structural zeros into the convergence window and stop it at sum = 0.
SeriesValue deriv_series(double x, ComplexScalar rho, int n, int m,
                         const TruncationPolicy& policy) {
  if (n < 1) {
    throw DomainError("deriv: n must be >= 1");
  }
  if (!(x > 0.0)) {
    throw DomainError("deriv: requires x > 0");
  }
  const double alpha = 1.0 / n;
  const double log_x = std::log(x);
  detail::LogScaledPower rho_pow(rho);
  for (int i = 0; i < m; ++i) {
    rho_pow.step();
  }
  return detail::sum_series(policy, [&](int t) -> ComplexScalar {
    if (t > 0) rho_pow.step();
    const int k = t + m;
    // u tracks (current exponent) + 1 through the m steps; each step
    // multiplies by Gamma(u)/Gamma(u - 1/n)
    double u = (k + 1.0) / n;
    double log_factor = -log_gamma(u);  // 1/Gamma((k+1)/n) of the term itself
    for (int j = 0; j < m; ++j) {
      double v = u - alpha;
      if (detail::near_nonpositive_integer(v)) {
        return {0.0, 0.0};
      }
      log_factor += log_gamma(u);
      log_factor -= log_gamma(v);
      u = v;
    }
    return rho_pow.value(log_factor + (u - 1.0) * log_x);
  });
}

}  // namespace

PowerTerm rl_deriv_power(const PowerTerm& term, double alpha) {
  check_alpha(alpha, "rl_deriv_power");
  if (!(term.exponent > -1.0)) {
    throw DomainError("rl_deriv_power: exponent must exceed -1");
  }
  double scale_num = gamma(term.exponent + 1.0);
  double scale = scale_num * recip_gamma(term.exponent + 1.0 - alpha);
  return PowerTerm{term.coeff * scale, term.exponent - alpha};
}

SeriesValue termwise_deriv_h(double x, ComplexScalar rho, int n,
                             const TruncationPolicy& policy) {
  return deriv_series(x, rho, n, 1, policy);
}

SeriesValue sequential_deriv(double x, ComplexScalar lambda,
                             const RationalOrder& order,
                             const TruncationPolicy& policy) {
  return deriv_series(x, principal_root(lambda, order.m), order.n, order.m,
                      policy);
}

SeriesValue rl_integral_exp(double alpha, ComplexScalar a, double x0, double x,
                            const TruncationPolicy& policy) {
  check_alpha(alpha, "rl_integral_exp");
  if (!(x >= x0)) {
    throw DomainError("rl_integral_exp: requires x >= x0");
  }
  const double d = x - x0;
  if (d == 0.0) {
    return SeriesValue{{0.0, 0.0}, 0, 0.0, true};
  }
  if (std::abs(a) == 0.0) {
    ComplexScalar v{std::exp(alpha * std::log(d) - log_gamma(alpha + 1.0)),
                    0.0};
    return SeriesValue{v, 1, std::abs(v), true};
  }
  const double log_d = std::log(d);
  const double lgam_alpha = log_gamma(alpha);
  const ComplexScalar pre = complex_exp(a * x);
  detail::LogScaledPower a_pow(a);
  SeriesValue inner = detail::sum_series(policy, [&](int k) {
    if (k > 0) a_pow.step();
    double sgn = (k % 2 == 0) ? 1.0 : -1.0;
    return sgn *
           a_pow.value((alpha + k) * log_d - log_gamma(k + 1.0) - lgam_alpha) /
           (alpha + k);
  });
  SeriesValue out;
  out.value = pre * inner.value;
  out.terms_used = inner.terms_used;
  out.last_term_mag = std::abs(pre) * inner.last_term_mag;
  out.converged = inner.converged;
  if (!std::isfinite(out.value.real()) || !std::isfinite(out.value.imag())) {
    throw OverflowError("rl_integral_exp: value overflowed double range");
  }
  return out;
}

namespace {

// 16-point Gauss-Legendre on [-1, 1]: positive abscissae with weights; the
// rule is symmetric. Verified against a degree-30 monomial to ~3e-15.
struct GaussNode {
  double x, w;
};
constexpr GaussNode kGauss16[8] = {
    {0.095012509837637454, 0.18945061045506811},
    {0.28160355077925892, 0.18260341504492328},
    {0.45801677765722743, 0.16915651939500212},
    {0.61787624440264377, 0.14959598881657638},
    {0.755404408355003, 0.12462897125553363},
    {0.86563120238783176, 0.095158511682492314},
    {0.9445750230732326, 0.06225352393864763},
    {0.98940093499164994, 0.027152459411756466},
};

}  // namespace

ComplexScalar rl_integral_quadrature(double alpha, ComplexScalar a, double x0,
                                     double x, int panels) {
  check_alpha(alpha, "rl_integral_quadrature");
  if (!(x > x0)) {
    throw DomainError("rl_integral_quadrature: requires x > x0");
  }
  if (panels < 1) {
    throw DomainError("rl_integral_quadrature: panels must be >= 1");
  }
  const double upper = std::pow(x - x0, alpha);
  const double inv_alpha = 1.0 / alpha;
  const double h = upper / panels;
  ComplexScalar acc{0.0, 0.0};
  for (int p = 0; p < panels; ++p) {
    const double center = (p + 0.5) * h;
    const double half = 0.5 * h;
    ComplexScalar panel{0.0, 0.0};
    for (const GaussNode& node : kGauss16) {
      double lo = center - half * node.x;
      double hi = center + half * node.x;
      panel += node.w * (complex_exp(a * (x - std::pow(lo, inv_alpha))) +
                         complex_exp(a * (x - std::pow(hi, inv_alpha))));
    }
    acc += panel * half;
  }
  // 1/(alpha Gamma(alpha)) = recip_gamma(alpha + 1)
  return acc * recip_gamma(alpha + 1.0);
}

ComplexScalar rl_integral_quadrature_auto(double alpha, ComplexScalar a,
                                          double x0, double x) {
  ComplexScalar prev = rl_integral_quadrature(alpha, a, x0, x, 1);
  for (int panels = 2; panels <= 1024; panels *= 2) {
    ComplexScalar cur = rl_integral_quadrature(alpha, a, x0, x, panels);
    if (std::abs(cur - prev) <= 1e-10 * std::abs(cur)) {
      return cur;
    }
    prev = cur;
  }
  return prev;
}

}  // namespace mlexp
