#include "stringtop/tqft/bordism.hpp"

#include <map>
#include <numeric>
#include <set>

#include "stringtop/error.hpp"

namespace stringtop::tqft {

std::string_view kind_name(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::pants: return "pants";
    case GeneratorKind::copants: return "copants";
    case GeneratorKind::cylinder: return "cylinder";
    case GeneratorKind::twist: return "twist";
  }
  return "?";
}

GeneratorKind parse_kind(std::string_view name) {
  for (auto k : {GeneratorKind::pants, GeneratorKind::copants, GeneratorKind::cylinder, GeneratorKind::twist}) {
    if (kind_name(k) == name) return k;
  }
  throw Error("unknown generator '" + std::string(name) + "'");
}

std::size_t kind_inputs(GeneratorKind kind) {
  return kind == GeneratorKind::pants || kind == GeneratorKind::twist ? 2 : 1;
}

std::size_t kind_outputs(GeneratorKind kind) {
  return kind == GeneratorKind::copants || kind == GeneratorKind::twist ? 2 : 1;
}

BordismDag::BordismDag(std::string name, std::size_t inputs, std::size_t outputs)
    : name_(std::move(name)), inputs_(inputs), outputs_(outputs) {
  if (inputs_ == 0 || outputs_ == 0) {
    throw Error("bordism must have at least one input and one output (positive boundary)");
  }
}

std::size_t BordismDag::add_node(std::string id, GeneratorKind kind) {
  if (id.empty() || id == "in" || id == "out" || id.find('.') != std::string::npos) {
    throw Error("invalid node id '" + id + "'");
  }
  if (find_node(id)) throw Error("duplicate node '" + id + "'");
  nodes_.push_back({std::move(id), kind});
  return nodes_.size() - 1;
}

void BordismDag::add_wire(Port source, Port target) {
  if (!source.is_source()) throw Error("wire starts at " + port_name(source) + ", which is not a source port");
  if (target.is_source()) throw Error("wire ends at " + port_name(target) + ", which is not a target port");
  wires_.push_back({source, target});
}

std::optional<std::size_t> BordismDag::find_node(std::string_view id) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].id == id) return i;
  }
  return std::nullopt;
}

std::optional<Port> BordismDag::source_of(const Port& target) const {
  for (const auto& w : wires_) {
    if (w.target == target) return w.source;
  }
  return std::nullopt;
}

std::string BordismDag::port_name(const Port& p) const {
  std::string side = p.side == Port::Side::in ? "in" : "out";
  std::string base = side + "." + std::to_string(p.index);
  if (p.node == Port::boundary) return base;
  return (p.node < nodes_.size() ? nodes_[p.node].id : "#" + std::to_string(p.node)) + "." + base;
}

Port BordismDag::parse_port(std::string_view text) const {
  auto fail = [&]() -> Port { throw Error("malformed port '" + std::string(text) + "'"); };
  const auto last = text.rfind('.');
  if (last == std::string_view::npos || last + 1 >= text.size()) return fail();
  std::size_t index = 0;
  for (char c : text.substr(last + 1)) {
    if (c < '0' || c > '9') return fail();
    index = index * 10 + static_cast<std::size_t>(c - '0');
  }
  const std::string_view head = text.substr(0, last);
  const auto dot = head.rfind('.');
  const std::string_view side_text = dot == std::string_view::npos ? head : head.substr(dot + 1);
  Port p;
  p.index = index;
  if (side_text == "in") {
    p.side = Port::Side::in;
  } else if (side_text == "out") {
    p.side = Port::Side::out;
  } else {
    return fail();
  }
  if (dot != std::string_view::npos) {
    auto node = find_node(head.substr(0, dot));
    if (!node) throw Error("unknown node '" + std::string(head.substr(0, dot)) + "'");
    p.node = *node;
  }
  return p;
}

std::size_t BordismDag::count(GeneratorKind kind) const {
  std::size_t n = 0;
  for (const auto& node : nodes_) n += node.kind == kind ? 1 : 0;
  return n;
}

void BordismDag::validate() const {
  std::map<Port, int> used_sources;
  std::map<Port, int> used_targets;
  auto check_port = [&](const Port& p) {
    const std::size_t limit = p.node == Port::boundary
                                  ? (p.side == Port::Side::in ? inputs_ : outputs_)
                                  : (p.node < nodes_.size() ? (p.side == Port::Side::in ? kind_inputs(nodes_[p.node].kind)
                                                                                        : kind_outputs(nodes_[p.node].kind))
                                                            : 0);
    if (p.index >= limit) throw Error("port " + port_name(p) + " does not exist");
  };
  for (const auto& w : wires_) {
    check_port(w.source);
    check_port(w.target);
    if (++used_sources[w.source] > 1) throw Error("port " + port_name(w.source) + " is wired more than once");
    if (++used_targets[w.target] > 1) throw Error("port " + port_name(w.target) + " is wired more than once");
  }
  auto require = [&](const Port& p, const std::map<Port, int>& used) {
    if (!used.count(p)) throw Error("dangling port " + port_name(p));
  };
  for (std::size_t k = 0; k < inputs_; ++k) require(input(k), used_sources);
  for (std::size_t k = 0; k < outputs_; ++k) require(output(k), used_targets);
  for (std::size_t n = 0; n < nodes_.size(); ++n) {
    for (std::size_t k = 0; k < kind_inputs(nodes_[n].kind); ++k) require(node_in(n, k), used_targets);
    for (std::size_t k = 0; k < kind_outputs(nodes_[n].kind); ++k) require(node_out(n, k), used_sources);
  }
  (void)topological_order();
}

std::vector<std::size_t> BordismDag::topological_order() const {
  std::vector<std::size_t> indegree(nodes_.size(), 0);
  std::vector<std::vector<std::size_t>> next(nodes_.size());
  for (const auto& w : wires_) {
    if (w.target.node == Port::boundary) continue;
    ++indegree[w.target.node];
    if (w.source.node != Port::boundary) next[w.source.node].push_back(w.target.node);
  }
  // Node-to-node edges only count against indegree through the loop below;
  // boundary-fed inputs are satisfied from the start.
  std::vector<std::size_t> pending(nodes_.size(), 0);
  for (const auto& w : wires_) {
    if (w.target.node != Port::boundary && w.source.node != Port::boundary) ++pending[w.target.node];
  }
  std::vector<std::size_t> order;
  std::set<std::size_t> ready;
  for (std::size_t n = 0; n < nodes_.size(); ++n) {
    if (pending[n] == 0) ready.insert(n);
  }
  while (!ready.empty()) {
    const std::size_t n = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(n);
    for (std::size_t m : next[n]) {
      if (--pending[m] == 0) ready.insert(m);
    }
  }
  if (order.size() != nodes_.size()) throw Error("bordism wiring has a cycle");
  return order;
}

bool operator==(const BordismDag& a, const BordismDag& b) {
  if (a.name_ != b.name_ || a.inputs_ != b.inputs_ || a.outputs_ != b.outputs_) return false;
  if (a.nodes_.size() != b.nodes_.size() || a.wires_.size() != b.wires_.size()) return false;
  for (std::size_t i = 0; i < a.nodes_.size(); ++i) {
    if (a.nodes_[i].id != b.nodes_[i].id || a.nodes_[i].kind != b.nodes_[i].kind) return false;
  }
  for (std::size_t i = 0; i < a.wires_.size(); ++i) {
    if (a.wires_[i].source != b.wires_[i].source || a.wires_[i].target != b.wires_[i].target) return false;
  }
  return true;
}

std::string type_name(const TopologicalType& t) {
  return "g=" + std::to_string(t.genus) + " m=" + std::to_string(t.inputs) + " n=" + std::to_string(t.outputs);
}

std::optional<TopologicalType> type_of(const BordismDag& b) {
  // Union-find over boundary ports and node pieces; a twist is two
  // cylinders (in.0 to out.1, in.1 to out.0), every other node one piece.
  const std::size_t nodes = b.nodes().size();
  const std::size_t boundary = b.inputs() + b.outputs();
  const std::size_t total = boundary + 2 * nodes;
  std::vector<std::size_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto element = [&](const Port& p) -> std::size_t {
    if (p.node == Port::boundary) return p.side == Port::Side::in ? p.index : b.inputs() + p.index;
    const bool second = b.nodes()[p.node].kind == GeneratorKind::twist &&
                        (p.side == Port::Side::in ? p.index == 1 : p.index == 0);
    return boundary + 2 * p.node + (second ? 1 : 0);
  };
  for (const auto& w : b.wires()) parent[find(element(w.source))] = find(element(w.target));
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < boundary; ++i) roots.insert(find(i));
  for (std::size_t n = 0; n < nodes; ++n) {
    roots.insert(find(boundary + 2 * n));
    if (b.nodes()[n].kind == GeneratorKind::twist) roots.insert(find(boundary + 2 * n + 1));
  }
  if (roots.size() != 1) return std::nullopt;

  const long euler = -static_cast<long>(b.count(GeneratorKind::pants) + b.count(GeneratorKind::copants));
  const long twice_genus = 2 - euler - static_cast<long>(b.inputs() + b.outputs());
  if (twice_genus < 0 || twice_genus % 2 != 0) return std::nullopt;
  return TopologicalType{static_cast<int>(twice_genus / 2), b.inputs(), b.outputs()};
}

}  // namespace stringtop::tqft
