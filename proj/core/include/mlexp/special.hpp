#pragma once

#include "mlexp/types.hpp"

namespace mlexp {

// Gamma function for real z, Lanczos approximation (g = 7, 9 coefficients),
// reflection formula below z = 0.5. Relative accuracy ~1e-13 on [0.1, 30].
// Throws PoleError at non-positive integers, OverflowError for z > 171.
double gamma(double z);

// ln Gamma(z) for z > 0; throws DomainError otherwise. Stays finite far past
// the overflow point of gamma itself.
double log_gamma(double z);

// 1 / Gamma(z), entire in exact arithmetic. Returns exactly 0.0 at every
// non-positive integer, where "at" means within a snap window of 1e-12: pole
// arguments reach this function through floating-point exponent arithmetic
// that is off by a few ulp, and the annihilation guarantees downstream rely
// on getting a true zero. Genuine arguments this library produces are never
// closer than 1/(2n) to a pole, orders of magnitude outside the window.
// Also 0.0 for z > 171 (underflow); throws OverflowError for z < -170.
double recip_gamma(double z);

// sin(pi * x) with exact integer reduction, so sin_pi(k) == 0 for integer k.
double sin_pi(double x);

// Principal m-th root: modulus |z|^{1/m}, argument Arg(z)/m with
// Arg in (-pi, pi]. A negative real input with -0.0 imaginary part is
// treated as Arg = +pi. principal_root(0, m) == 0.
ComplexScalar principal_root(ComplexScalar z, int m);

// exp(z) guarded against double overflow: throws OverflowError when
// Re z > 700.
ComplexScalar complex_exp(ComplexScalar z);

// base^exp for small non-negative integer exp, by repeated multiplication
// (deterministic, no polar round trip). Throws OverflowError on overflow.
ComplexScalar complex_ipow(ComplexScalar base, int exp);

}  // namespace mlexp
