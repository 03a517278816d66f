#include <cstring>
#include <iostream>

#include "stringtop/acceptance.hpp"

// Prints one PASS/FAIL line per acceptance criterion, then the detail lines
// of failing criteria. `--serial` runs the reference path.
int main(int argc, char** argv) {
  using namespace stringtop;
  const bool serial = argc > 1 && std::strcmp(argv[1], "--serial") == 0;
  const auto results = acceptance::run_all(serial ? Execution::serial : Execution::parallel);
  bool ok = true;
  for (const auto& r : results) {
    std::cout << acceptance::summary_line(r) << '\n';
    ok = ok && r.passed;
  }
  for (const auto& r : results) {
    if (r.passed) continue;
    for (const auto& line : r.details) std::cout << "  [" << r.id << "] " << line << '\n';
  }
  return ok ? 0 : 1;
}
