#include "mlexp/types.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "mlexp/errors.hpp"

namespace mlexp {

RationalOrder::RationalOrder(int m_, int n_) : m(m_), n(n_) {
  if (m < 1 || n < 1) {
    throw DomainError("order: m and n must be positive integers");
  }
  if (m > n) {
    throw DomainError("order: require m <= n (order at most 1)");
  }
  if (std::gcd(m, n) != 1) {
    throw DomainError("order: m/n must be in lowest terms");
  }
}

void TruncationPolicy::validate() const {
  if (!(rel_tol > 0.0) || !std::isfinite(rel_tol)) {
    throw DomainError("truncation: rel_tol must be positive and finite");
  }
  if (!(abs_tol >= 0.0) || !std::isfinite(abs_tol)) {
    throw DomainError("truncation: abs_tol must be non-negative and finite");
  }
  if (max_terms < 10) {
    throw DomainError("truncation: max_terms must be at least 10");
  }
  if (consecutive_below < 1) {
    throw DomainError("truncation: consecutive_below must be at least 1");
  }
}

}  // namespace mlexp
