#pragma once

#include <cmath>

namespace mlexp::detail {

// Snap window for gamma-pole detection; see recip_gamma in special.hpp.
inline constexpr double kPoleSnap = 1e-12;

inline bool near_nonpositive_integer(double z) {
  double r = std::round(z);
  return r <= 0.0 && std::abs(z - r) <= kPoleSnap;
}

}  // namespace mlexp::detail
