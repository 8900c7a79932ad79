#pragma once

#include "mlexp/types.hpp"

namespace mlexp {

// Parameter bundle for the exponential-representation evaluators.
struct ReprParams {
  double x0 = 0.1;  // expansion point, 0 < x0 <= x
  RationalOrder order{};
  ComplexScalar lambda{1.0, 0.0};
  TruncationPolicy policy{};
};

// Homogeneous part of the representation of sub-series s:
//
//   e^{rho^n x0} x^{(s+1)/n - 1} / Gamma((s+1)/n).
//
// For s = n-1 this is just e^{rho^n x0}. Throws DomainError for bad s, n
// or x <= 0.
ComplexScalar homogeneous_term(int s, double x, double x0, ComplexScalar rho,
                               int n);

// Sub-series s rebuilt from exponentials instead of its power series. With
// a = rho^n and mu = (s+1)/n:
//
//   J_s ~= a e^{a x} / Gamma(mu) * sum_{k>=0} (-1)^k/k! a^k (x-x0)^{mu+k}/(mu+k)
//          + homogeneous_term(s, ...).
//
// Exact in the limit x0 -> 0+ (the defect is O(x0^2)); exact for any x0 when
// n = 1. Requires 0 < x0 <= x. terms_used counts the inner sum only.
SeriesValue j_exp(int s, double x, double x0, ComplexScalar rho, int n,
                  const TruncationPolicy& policy = {});

// h rebuilt from exponentials: sum_s rho^s j_exp(s, ...).
SeriesValue h_exp(double x, double x0, ComplexScalar rho, int n,
                  const TruncationPolicy& policy = {});

// h_exp with the parameter given as lambda = rho^m: takes the principal m-th
// root and delegates. The eigenvalue-facing entry point.
SeriesValue h_exp_lambda(double x, double x0, ComplexScalar lambda,
                         const RationalOrder& order,
                         const TruncationPolicy& policy = {});
SeriesValue h_exp_lambda(double x, const ReprParams& params);

// Same value as h_exp_lambda but built directly from fractional powers
// lambda^{s/m}, lambda^{n/m}, ... on the principal branch, never forming rho
// explicitly. Agreement with h_exp_lambda is a substitution-consistency
// check on the branch handling.
SeriesValue h_exp_lambda_direct(double x, double x0, ComplexScalar lambda,
                                const RationalOrder& order,
                                const TruncationPolicy& policy = {});

}  // namespace mlexp
