#ifndef KCB_VERIFY_SUITE_HPP
#define KCB_VERIFY_SUITE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace kcb {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  /// True for checks of open problems: a mismatch is reported, not fatal.
  bool warning_only = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the full verification grid (the paper suite). Progress lines go to
/// `log` when non-null. A suite passes when every non-warning criterion
/// passes.
std::vector<CriterionResult> run_paper_suite(std::ostream* log = nullptr);

bool suite_passed(const std::vector<CriterionResult>& results);

}  // namespace kcb

#endif
