#pragma once

#include "mlexp/types.hpp"

namespace mlexp {

// Shifted Mittag-Leffler function of order 1/n,
//
//   h(x) = sum_{k>=0} rho^k x^{(k+1)/n - 1} / Gamma((k+1)/n),   x > 0.
//
// Equals x^{1/n-1} E_{1/n,1/n}(rho x^{1/n}); n = 1 collapses to e^{rho x}.
// Terms are evaluated in log space, so large x, |rho| or k never overflow
// intermediates. Throws DomainError for x <= 0 or n < 1.
SeriesValue h_series(double x, ComplexScalar rho, int n,
                     const TruncationPolicy& policy = {});

// Sub-series s of the n-way split of h, as a function of a = rho^n:
//
//   J_s(x; a) = sum_{k>=0} a^k x^{k - 1 + (s+1)/n} / Gamma(k + (s+1)/n),
//
// s in [0, n-1]. J_{n-1}(x; a) = e^{a x}. Throws DomainError for s out of
// range, x <= 0 or n < 1.
SeriesValue j_series(int s, double x, ComplexScalar a, int n,
                     const TruncationPolicy& policy = {});

// h reassembled from its sub-series: sum_s rho^s J_s(x; rho^n). Must agree
// with h_series to truncation accuracy; kept separate as a structural
// cross-check. terms_used accumulates over the n sub-series.
SeriesValue h_via_decomposition(double x, ComplexScalar rho, int n,
                                const TruncationPolicy& policy = {});

}  // namespace mlexp
