#pragma once

#include <functional>
#include <string>
#include <vector>

namespace resurgentia::tools {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// Acceptance criteria 1..9, each timed and isolated (an exception fails only
// its own criterion).
std::vector<CriterionResult> run_acceptance();
CriterionResult run_criterion(int id);
int criterion_count();

}  // namespace resurgentia::tools
