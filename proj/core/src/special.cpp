#include "mlexp/special.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "mlexp/errors.hpp"
#include "pole_window.hpp"

namespace mlexp {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtTwoPi = 2.5066282746310002;
constexpr double kHalfLogTwoPi = 0.91893853320467274;

// gamma(z) overflows double shortly past this argument
constexpr double kGammaOverflowArg = 171.62;

// Lanczos, g = 7
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

double lanczos_sum(double z) {
  // valid for z >= 0.5
  double a = kLanczos[0];
  for (int i = 1; i < 9; ++i) {
    a += kLanczos[i] / (z - 1.0 + i);
  }
  return a;
}

double lanczos_gamma(double z) {
  // z in [0.5, ~171.62]; t^{z-0.5} alone overflows past z ~ 145 even though
  // gamma itself is still representable, so split the power around exp(-t)
  double t = z + 6.5;
  double half_pow = std::pow(t, 0.5 * (z - 0.5));
  return kSqrtTwoPi * half_pow * std::exp(-t) * half_pow * lanczos_sum(z);
}

}  // namespace

double sin_pi(double x) {
  // sin(pi (k + r)) = (-1)^k sin(pi r), |r| <= 1/2, so the std::sin argument
  // never exceeds pi/2 and integer inputs reduce to r == 0 exactly
  double k = std::round(x);
  double r = x - k;
  double s = std::sin(kPi * r);
  return std::fmod(k, 2.0) == 0.0 ? s : -s;
}

double gamma(double z) {
  if (detail::near_nonpositive_integer(z)) {
    throw PoleError("gamma: pole at non-positive integer z = " + std::to_string(z));
  }
  if (z >= 0.5) {
    if (z > kGammaOverflowArg) {
      throw OverflowError("gamma: overflow for z = " + std::to_string(z));
    }
    return lanczos_gamma(z);
  }
  // reflection: gamma(z) = pi / (sin(pi z) * gamma(1 - z)), 1 - z > 0.5
  double w = 1.0 - z;
  double s = sin_pi(z);
  if (w <= kGammaOverflowArg) {
    return kPi / (s * lanczos_gamma(w));
  }
  // deep negative arguments: |gamma| underflows, route through logs
  double lg = std::log(kPi / std::abs(s)) - log_gamma(w);
  return std::copysign(std::exp(lg), s);
}

double log_gamma(double z) {
  if (!(z > 0.0)) {
    throw DomainError("log_gamma: requires z > 0, got " + std::to_string(z));
  }
  if (z >= 0.5) {
    double t = z + 6.5;
    return kHalfLogTwoPi + (z - 0.5) * std::log(t) - t + std::log(lanczos_sum(z));
  }
  // gamma(z) > 0 on (0, 0.5), reflection stays real
  return std::log(kPi / sin_pi(z)) - log_gamma(1.0 - z);
}

double recip_gamma(double z) {
  if (detail::near_nonpositive_integer(z)) {
    return 0.0;
  }
  if (z > 0.0) {
    if (z > kGammaOverflowArg) {
      return 0.0;  // 1/gamma underflows
    }
    return 1.0 / gamma(z);
  }
  double w = 1.0 - z;
  if (w > kGammaOverflowArg) {
    throw OverflowError("recip_gamma: overflow for z = " + std::to_string(z));
  }
  // 1/gamma(z) = sin(pi z) gamma(1 - z) / pi
  return sin_pi(z) * lanczos_gamma(w) / kPi;
}

ComplexScalar principal_root(ComplexScalar z, int m) {
  if (m < 1) {
    throw DomainError("principal_root: m must be >= 1");
  }
  if (m == 1) {
    return z;
  }
  double a = std::abs(z);
  if (a == 0.0) {
    return {0.0, 0.0};
  }
  if (z.imag() == 0.0) {
    z = ComplexScalar(z.real(), 0.0);  // pin -0.0 imag so Arg(-x) = +pi
  }
  return std::polar(std::pow(a, 1.0 / m), std::arg(z) / m);
}

ComplexScalar complex_exp(ComplexScalar z) {
  if (z.real() > 700.0) {
    throw OverflowError("complex_exp: Re z = " + std::to_string(z.real()) +
                        " exceeds double exponent range");
  }
  return std::exp(z);
}

ComplexScalar complex_ipow(ComplexScalar base, int exp) {
  if (exp < 0) {
    throw DomainError("complex_ipow: exponent must be non-negative");
  }
  ComplexScalar r{1.0, 0.0};
  for (int i = 0; i < exp; ++i) {
    r *= base;
  }
  if (!std::isfinite(r.real()) || !std::isfinite(r.imag())) {
    throw OverflowError("complex_ipow: result overflowed");
  }
  return r;
}

}  // namespace mlexp
