#pragma once

#include <string>
#include <vector>

#include "stringtop/parallel.hpp"

namespace stringtop::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::vector<std::string> details;  // one line each
  double seconds = 0;
};

CriterionResult lie_bialgebra_suite(Execution mode);
CriterionResult goldman_pilot_values();
CriterionResult open_string_suite(Execution mode);
CriterionResult tqft_invariance(Execution mode);
CriterionResult tqft_sensitivity(Execution mode);
CriterionResult appendix_table();
CriterionResult format_round_trips();

/// All criteria in order.
std::vector<CriterionResult> run_all(Execution mode = Execution::parallel);

/// `PASS|FAIL [<id>] <title> (<seconds>s)`.
std::string summary_line(const CriterionResult& r);

}  // namespace stringtop::acceptance
