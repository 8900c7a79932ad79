#pragma once

#include "mlexp/types.hpp"

namespace mlexp {

// One power-function summand c * x^e.
struct PowerTerm {
  ComplexScalar coeff{1.0, 0.0};
  double exponent = 0.0;
};

// Riemann-Liouville derivative of order alpha in (0, 1] applied to a power:
//
//   D^alpha [c x^beta] = c Gamma(beta+1) / Gamma(beta+1-alpha) * x^{beta-alpha}.
//
// The reciprocal gamma is used directly, so when beta+1-alpha lands on a
// non-positive integer the coefficient comes out exactly 0 (annihilation).
// Requires beta > -1.
PowerTerm rl_deriv_power(const PowerTerm& term, double alpha);

// Order-1/n derivative of h applied term by term. By the index shift this
// equals rho * h_series(x, rho, n); the identity is the eigen relation for
// m = 1. rho = 0 gives exactly 0 (the single surviving term is annihilated).
SeriesValue termwise_deriv_h(double x, ComplexScalar rho, int n,
                             const TruncationPolicy& policy = {});

// Sequential derivative of order m/n: m-fold composition of the order-1/n
// power rule applied to each term of h with rho = principal m-th root of
// lambda. Composition (not a single order-m/n step) is what annihilates all
// of the first m terms; the result satisfies the eigen relation
// sequential_deriv ~= lambda * h_series.
SeriesValue sequential_deriv(double x, ComplexScalar lambda,
                             const RationalOrder& order,
                             const TruncationPolicy& policy = {});

// Riemann-Liouville integral of an exponential from base point x0:
//
//   I^alpha_{x0}[e^{a t}](x)
//     = e^{a x} sum_{k>=0} (-1)^k/k! a^k (x-x0)^{alpha+k} / ((alpha+k) Gamma(alpha)).
//
// alpha in (0, 1], x >= x0 (x == x0 gives exactly 0); a = 0 collapses to
// (x-x0)^alpha / Gamma(alpha+1).
SeriesValue rl_integral_exp(double alpha, ComplexScalar a, double x0, double x,
                            const TruncationPolicy& policy = {});

// Same integral by composite 16-point Gauss-Legendre quadrature after the
// substitution u = (x-t)^alpha, which removes the endpoint singularity:
//
//   I = 1/(alpha Gamma(alpha)) * integral_0^{(x-x0)^alpha} e^{a(x - u^{1/alpha})} du.
//
// Independent of the series route; used as the cross-validation oracle.
// Requires x > x0 and panels >= 1.
ComplexScalar rl_integral_quadrature(double alpha, ComplexScalar a, double x0,
                                     double x, int panels);

// Doubles the panel count from 1 until two successive refinements agree to
// 1e-10 relative, capped at 1024 panels (the cap returns the last value).
ComplexScalar rl_integral_quadrature_auto(double alpha, ComplexScalar a,
                                          double x0, double x);

}  // namespace mlexp
