#include "stringtop/property.hpp"

#include <algorithm>
#include <cstdint>

namespace stringtop {

PropertyResult run_property(std::string name, std::size_t count, Execution mode,
                            const std::function<std::optional<std::string>(std::size_t)>& failure) {
  std::vector<std::optional<std::string>> outcome(count);
  for_each_case(mode, count, [&](std::size_t i) { outcome[i] = failure(i); });
  PropertyResult r;
  r.name = std::move(name);
  r.cases = count;
  for (auto& o : outcome) {
    if (!o) continue;
    if (!r.first_failure) r.first_failure = std::move(o);
    ++r.failures;
  }
  return r;
}

bool all_passed(const std::vector<PropertyResult>& results) {
  return !results.empty() &&
         std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
}

std::string format_property(const PropertyResult& r) {
  std::string out = (r.passed() ? "PASS " : "FAIL ") + r.name + " cases=" + std::to_string(r.cases) +
                    " failures=" + std::to_string(r.failures);
  if (r.first_failure) out += " first=" + *r.first_failure;
  return out;
}

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace stringtop
