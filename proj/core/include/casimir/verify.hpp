#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace casimir {

struct CriterionResult {
  std::string id;
  std::string description;
  bool pass;
  double achieved;   // worst observed deviation (or fitted quantity)
  double tolerance;  // bound it must stay under (or target window)
  double seconds;
  std::string detail;
};

/// Runs the verification suite; `filter` selects criteria whose id contains it
/// (empty = all). Each entry prints independently; the CLI and the acceptance
/// test binary both drive this registry.
std::vector<CriterionResult> run_acceptance(std::string_view filter = {});

/// One-line "PASS/FAIL id ..." rendering.
std::string format_criterion_line(const CriterionResult& r);

}  // namespace casimir
