#pragma once

#include <string>
#include <string_view>

#include "stringtop/graph/ambient_graph.hpp"

namespace stringtop::graph {

// graph <name>
// vertex <id>
// edge <id> <from> <to>
// label <name> <v1> <v2> ...
AmbientGraph parse_graph(std::string_view text);
AmbientGraph load_graph(const std::string& path);
std::string serialize_graph(const AmbientGraph& g);

bool same_structure(const AmbientGraph& a, const AmbientGraph& b);

}  // namespace stringtop::graph
