#pragma once

#include <iosfwd>
#include <string>
#include <vector>

// Acceptance battery: one entry per checked guarantee, shared between the
// dedicated acceptance binary and the `gct suite` subcommand.  Tolerances and
// corpus seeds are pinned in the implementation.
namespace gct::suite {

struct CriterionResult {
  std::string id;
  std::string label;
  bool pass = false;
  std::string detail;  // counts, bounds reached, or the first failure
  double seconds = 0.0;
};

std::vector<CriterionResult> run_all(std::ostream* progress = nullptr);
bool all_passed(const std::vector<CriterionResult>& results);
void print_table(std::ostream& out, const std::vector<CriterionResult>& results);

}  // namespace gct::suite
