#pragma once

#include <string>
#include <string_view>

#include "stringtop/tqft/bordism.hpp"

namespace stringtop::tqft {

// Line-oriented text format:
//
//   bordism <name>
//   in <m>
//   out <n>
//   node <id> pants|copants|cylinder|twist
//   wire <source-port> <target-port>
//
// Ports are in.<k>, out.<k>, <node>.in.<k>, <node>.out.<k>.

/// Throws stringtop::ParseError with a line number, including for m = 0 or
/// n = 0 and for a wiring that fails validation.
BordismDag parse_bordism(std::string_view text);
BordismDag load_bordism(const std::string& path);

/// Canonical text: header, then nodes and wires in insertion order.
std::string serialize_bordism(const BordismDag& b);

}  // namespace stringtop::tqft
