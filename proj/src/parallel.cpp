#include "stringtop/parallel.hpp"

#include <omp.h>

namespace stringtop {

std::string_view execution_name(Execution mode) {
  return mode == Execution::serial ? "serial" : "parallel";
}

int worker_count() { return omp_get_max_threads(); }

}  // namespace stringtop
