#pragma once

#include <string>
#include <string_view>

#include "stringtop/dialgebra/dialgebra.hpp"

namespace stringtop::dialgebra {

// Line-oriented text format:
//
//   dialgebra <name>
//   basis <symbol> deg <int>
//   unit <symbol>
//   shift prod|coprod <int>
//   prod <s1> <s2> -> <s3> : <p>/<q>
//   coprod <s1> -> <s2> <s3> : <p>/<q>
//
// '#' starts a comment. Omitted structure constants are zero.

/// Throws stringtop::ParseError with the offending line number.
Dialgebra parse_dialgebra(std::string_view text);
Dialgebra load_dialgebra(const std::string& path);

/// Canonical serialization: basis in declaration order, constants in basis
/// order, zero shifts omitted.
std::string serialize_dialgebra(const Dialgebra& d);

}  // namespace stringtop::dialgebra
