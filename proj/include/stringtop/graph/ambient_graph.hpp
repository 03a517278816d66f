#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace stringtop::graph {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  std::string name;
  VertexId from;
  VertexId to;
};

/// A set of vertices playing the role of an object (a "brane" the open
/// strings begin or end on).
class ObjectLabel {
 public:
  ObjectLabel() = default;
  ObjectLabel(std::initializer_list<VertexId> vertices) : vertices_(vertices) {}
  explicit ObjectLabel(std::set<VertexId> vertices) : vertices_(std::move(vertices)) {}

  bool contains(VertexId v) const { return vertices_.count(v) != 0; }
  bool subset_of(const ObjectLabel& other) const;
  bool disjoint_from(const ObjectLabel& other) const;
  bool empty() const { return vertices_.empty(); }
  const std::set<VertexId>& vertices() const { return vertices_; }

  friend bool operator==(const ObjectLabel&, const ObjectLabel&) = default;

 private:
  std::set<VertexId> vertices_;
};

/// Finite directed multigraph with named vertices, edges and labels.
class AmbientGraph {
 public:
  explicit AmbientGraph(std::string name = "graph") : name_(std::move(name)) {}

  VertexId add_vertex(std::string id);
  EdgeId add_edge(std::string id, VertexId from, VertexId to);
  void add_label(std::string name, ObjectLabel label);

  const std::string& name() const { return name_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<VertexId> find_vertex(const std::string& id) const;
  std::optional<EdgeId> find_edge(const std::string& id) const;
  /// Throws stringtop::Error for unknown names.
  VertexId vertex(const std::string& id) const;
  const ObjectLabel& label(const std::string& name) const;
  const std::vector<std::pair<std::string, ObjectLabel>>& labels() const { return labels_; }

  ObjectLabel all_vertices() const;
  /// Edges leaving `v`, in declaration order.
  std::vector<EdgeId> out_edges(VertexId v) const;

 private:
  std::string name_;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::pair<std::string, ObjectLabel>> labels_;
};

}  // namespace stringtop::graph
