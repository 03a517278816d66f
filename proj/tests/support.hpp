#pragma once

#include <string>

#include "stringtop/builtin.hpp"
#include "stringtop/dialgebra/format.hpp"

namespace test_support {

inline stringtop::dialgebra::Dialgebra reference(const char* name) {
  return stringtop::dialgebra::parse_dialgebra(stringtop::builtin::dialgebra_text(name));
}

inline std::string data_path(const std::string& file) { return std::string(STRINGTOP_DATA_DIR) + "/" + file; }

}  // namespace test_support
