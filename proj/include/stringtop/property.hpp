#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stringtop/parallel.hpp"

namespace stringtop {

/// Outcome of one identity checked over a population of cases.
struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::optional<std::string> first_failure;  // description of the lowest failing case

  bool passed() const { return failures == 0 && cases > 0; }
};

/// Evaluates `failure(i)` for every case; a case fails when it returns a
/// description. Results are merged in case order, so the outcome does not
/// depend on `mode`.
PropertyResult run_property(std::string name, std::size_t count, Execution mode,
                            const std::function<std::optional<std::string>(std::size_t)>& failure);

bool all_passed(const std::vector<PropertyResult>& results);

/// `PASS|FAIL <name> cases=<n> failures=<k>` plus the first failure, if any.
std::string format_property(const PropertyResult& r);

/// Mixes a suite seed with a case index into an independent stream seed.
std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace stringtop
