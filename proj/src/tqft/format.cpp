#include "stringtop/tqft/format.hpp"

#include <optional>
#include <sstream>

#include "../text_util.hpp"
#include "stringtop/error.hpp"

namespace stringtop::tqft {

BordismDag parse_bordism(std::string_view text) {
  const auto lines = text::tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty bordism file");

  std::size_t i = 0;
  auto header = [&](const char* keyword, const char* usage) -> const text::Line& {
    if (i >= lines.size()) throw ParseError(lines.back().number, std::string("missing '") + usage + "'");
    const auto& line = lines[i++];
    if (line.tokens[0] != keyword) throw ParseError(line.number, std::string("expected '") + usage + "'");
    text::expect_count(line, 2, usage);
    return line;
  };
  auto positive = [](const text::Line& line, const char* what) {
    const int v = text::parse_int(line, line.tokens[1]);
    if (v < 0) throw ParseError(line.number, std::string(what) + " must be nonnegative");
    if (v == 0) {
      throw ParseError(line.number, std::string(what) +
                                        " must be at least 1: positive-boundary bordisms have no caps or cups");
    }
    return static_cast<std::size_t>(v);
  };

  const std::string name = header("bordism", "bordism <name>").tokens[1];
  const std::size_t m = positive(header("in", "in <m>"), "input count");
  const std::size_t n = positive(header("out", "out <n>"), "output count");
  BordismDag b(name, m, n);

  for (; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto& kw = line.tokens[0];
    try {
      if (kw == "node") {
        text::expect_count(line, 3, "node <id> <kind>");
        b.add_node(line.tokens[1], parse_kind(line.tokens[2]));
      } else if (kw == "wire") {
        text::expect_count(line, 3, "wire <source-port> <target-port>");
        b.add_wire(b.parse_port(line.tokens[1]), b.parse_port(line.tokens[2]));
      } else {
        throw ParseError(line.number, "unknown keyword '" + kw + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(line.number, e.what());
    }
  }
  try {
    b.validate();
  } catch (const Error& e) {
    throw ParseError(lines.back().number, e.what());
  }
  return b;
}

BordismDag load_bordism(const std::string& path) { return parse_bordism(text::read_file(path)); }

std::string serialize_bordism(const BordismDag& b) {
  std::ostringstream os;
  os << "bordism " << b.name() << "\n";
  os << "in " << b.inputs() << "\n";
  os << "out " << b.outputs() << "\n";
  for (const auto& node : b.nodes()) os << "node " << node.id << " " << kind_name(node.kind) << "\n";
  for (const auto& w : b.wires()) os << "wire " << b.port_name(w.source) << " " << b.port_name(w.target) << "\n";
  return os.str();
}

}  // namespace stringtop::tqft
