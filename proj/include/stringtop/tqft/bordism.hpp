#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stringtop::tqft {

enum class GeneratorKind { pants, copants, cylinder, twist };

std::string_view kind_name(GeneratorKind kind);
/// Throws stringtop::Error for unknown names.
GeneratorKind parse_kind(std::string_view name);
std::size_t kind_inputs(GeneratorKind kind);
std::size_t kind_outputs(GeneratorKind kind);

/// A port is either on the bordism boundary (node == npos) or on a node.
/// Sources are boundary inputs and node outputs; targets are boundary
/// outputs and node inputs.
struct Port {
  static constexpr std::size_t boundary = static_cast<std::size_t>(-1);
  enum class Side { in, out };

  std::size_t node = boundary;
  Side side = Side::in;
  std::size_t index = 0;

  bool is_source() const { return (node == boundary) == (side == Side::in); }
  friend auto operator<=>(const Port&, const Port&) = default;
  friend bool operator==(const Port&, const Port&) = default;
};

struct Node {
  std::string id;
  GeneratorKind kind;
};

struct Wire {
  Port source;
  Port target;
};

/// A bordism presented as an acyclic wiring of pants, copants, cylinder and
/// twist generators between m >= 1 inputs and n >= 1 outputs.
class BordismDag {
 public:
  BordismDag(std::string name, std::size_t inputs, std::size_t outputs);

  std::size_t add_node(std::string id, GeneratorKind kind);
  void add_wire(Port source, Port target);

  /// Port constructors for readability at call sites.
  static Port input(std::size_t k) { return {Port::boundary, Port::Side::in, k}; }
  static Port output(std::size_t k) { return {Port::boundary, Port::Side::out, k}; }
  static Port node_in(std::size_t node, std::size_t k) { return {node, Port::Side::in, k}; }
  static Port node_out(std::size_t node, std::size_t k) { return {node, Port::Side::out, k}; }

  /// Throws stringtop::Error unless every port is wired exactly once, the
  /// wiring is acyclic and both boundaries are nonempty.
  void validate() const;
  /// Node indices in a dependency-respecting order (validate() first).
  std::vector<std::size_t> topological_order() const;

  const std::string& name() const { return name_; }
  std::size_t inputs() const { return inputs_; }
  std::size_t outputs() const { return outputs_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Wire>& wires() const { return wires_; }
  std::optional<std::size_t> find_node(std::string_view id) const;

  /// The source wired into `target`, if any.
  std::optional<Port> source_of(const Port& target) const;

  std::string port_name(const Port& p) const;
  /// Parses `in.k`, `out.k`, `<node>.in.k`, `<node>.out.k`.
  Port parse_port(std::string_view text) const;

  std::size_t count(GeneratorKind kind) const;

  friend bool operator==(const BordismDag& a, const BordismDag& b);

 private:
  std::string name_;
  std::size_t inputs_;
  std::size_t outputs_;
  std::vector<Node> nodes_;
  std::vector<Wire> wires_;
};

/// Connected bordism type: genus and boundary counts.
struct TopologicalType {
  int genus = 0;
  std::size_t inputs = 1;
  std::size_t outputs = 1;

  friend auto operator<=>(const TopologicalType&, const TopologicalType&) = default;
  friend bool operator==(const TopologicalType&, const TopologicalType&) = default;
};

std::string type_name(const TopologicalType& t);

/// Reads the type off a DAG: nullopt when the glued surface is disconnected.
/// Each pants/copants contributes −1 to the Euler characteristic.
std::optional<TopologicalType> type_of(const BordismDag& b);

}  // namespace stringtop::tqft
