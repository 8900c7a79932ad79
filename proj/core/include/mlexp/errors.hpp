#pragma once

#include <stdexcept>

namespace mlexp {

// Argument outside a function's mathematical domain.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Evaluation exactly at a pole of the gamma function.
struct PoleError : DomainError {
  using DomainError::DomainError;
};

// Result magnitude not representable in double range.
struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

// Malformed command-line invocation; maps to process exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mlexp
