#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <string_view>

namespace stringtop {

/// How a batch of independent cases is executed. `serial` is the reference
/// path; `parallel` distributes cases over OpenMP threads. Results are always
/// written to per-case slots, so both modes produce identical output.
enum class Execution { serial, parallel };

std::string_view execution_name(Execution mode);

/// Calls body(i) for i in [0, count). Exceptions thrown by any case are
/// rethrown (the one from the lowest index) after the loop finishes.
template <class Body>
void for_each_case(Execution mode, std::size_t count, Body&& body) {
  if (mode == Execution::serial) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr first;
  std::size_t first_index = count;
  std::mutex guard;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(guard);
      if (static_cast<std::size_t>(i) < first_index) {
        first_index = static_cast<std::size_t>(i);
        first = std::current_exception();
      }
    }
  }
  if (first) std::rethrow_exception(first);
}

/// Number of worker threads the parallel mode will use.
int worker_count();

}  // namespace stringtop
