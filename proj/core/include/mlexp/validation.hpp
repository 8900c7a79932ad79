#pragma once

#include <string>
#include <vector>

#include "mlexp/types.hpp"

namespace mlexp {

// Outcome of one named validation check. worst is the largest observed
// defect in the check's own metric; for the study check it is the distance
// of the fitted order from the centre of the accepted band.
struct CheckResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;
  double threshold = 0.0;
  double elapsed_seconds = 0.0;
  std::string detail;
};

// Names accepted by run_validation_check / the CLI --suite flag, in
// execution order.
const std::vector<std::string>& validation_check_names();

// Runs one named check. Throws DomainError for an unknown name.
CheckResult run_validation_check(const std::string& name,
                                 const TruncationPolicy& policy = {});

// suite == "all" runs every check in order; otherwise one named check.
std::vector<CheckResult> run_validation_suite(const std::string& suite,
                                              const TruncationPolicy& policy = {});

}  // namespace mlexp
