#include "stringtop/graph/format.hpp"

#include <sstream>

#include "../text_util.hpp"

namespace stringtop::graph {

AmbientGraph parse_graph(std::string_view source) {
  const auto lines = text::tokenize(source);
  if (lines.empty()) throw ParseError(1, "empty graph file");
  const auto& head = lines.front();
  if (head.tokens[0] != "graph") throw ParseError(head.number, "expected 'graph <name>'");
  text::expect_count(head, 2, "graph <name>");
  AmbientGraph g(head.tokens[1]);

  auto vertex = [&](const text::Line& line, const std::string& id) {
    if (auto v = g.find_vertex(id)) return *v;
    throw ParseError(line.number, "unknown vertex '" + id + "'");
  };

  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    const auto& t = line.tokens;
    try {
      if (t[0] == "vertex") {
        text::expect_count(line, 2, "vertex <id>");
        g.add_vertex(t[1]);
      } else if (t[0] == "edge") {
        text::expect_count(line, 4, "edge <id> <from> <to>");
        g.add_edge(t[1], vertex(line, t[2]), vertex(line, t[3]));
      } else if (t[0] == "label") {
        if (t.size() < 2) throw ParseError(line.number, "expected 'label <name> <v1> <v2> ...'");
        std::set<VertexId> vs;
        for (std::size_t i = 2; i < t.size(); ++i) vs.insert(vertex(line, t[i]));
        g.add_label(t[1], ObjectLabel(std::move(vs)));
      } else {
        throw ParseError(line.number, "unknown keyword '" + t[0] + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(line.number, e.what());
    }
  }
  return g;
}

AmbientGraph load_graph(const std::string& path) { return parse_graph(text::read_file(path)); }

std::string serialize_graph(const AmbientGraph& g) {
  std::ostringstream os;
  os << "graph " << g.name() << '\n';
  for (VertexId v = 0; v < g.vertex_count(); ++v) os << "vertex " << g.vertex_name(v) << '\n';
  for (const auto& e : g.edges()) {
    os << "edge " << e.name << ' ' << g.vertex_name(e.from) << ' ' << g.vertex_name(e.to) << '\n';
  }
  for (const auto& [name, label] : g.labels()) {
    os << "label " << name;
    for (VertexId v : label.vertices()) os << ' ' << g.vertex_name(v);
    os << '\n';
  }
  return os.str();
}

bool same_structure(const AmbientGraph& a, const AmbientGraph& b) {
  if (a.name() != b.name() || a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  for (VertexId v = 0; v < a.vertex_count(); ++v) {
    if (a.vertex_name(v) != b.vertex_name(v)) return false;
  }
  for (EdgeId e = 0; e < a.edge_count(); ++e) {
    const auto& x = a.edge(e);
    const auto& y = b.edge(e);
    if (x.name != y.name || x.from != y.from || x.to != y.to) return false;
  }
  return a.labels() == b.labels();
}

}  // namespace stringtop::graph
