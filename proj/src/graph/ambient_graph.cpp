#include "stringtop/graph/ambient_graph.hpp"

#include <algorithm>

#include "stringtop/error.hpp"

namespace stringtop::graph {

bool ObjectLabel::subset_of(const ObjectLabel& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
}

bool ObjectLabel::disjoint_from(const ObjectLabel& other) const {
  for (VertexId v : vertices_) {
    if (other.contains(v)) return false;
  }
  return true;
}

VertexId AmbientGraph::add_vertex(std::string id) {
  if (id.empty() || id.front() == '@' || id.find('.') != std::string::npos) {
    throw Error("invalid vertex id '" + id + "'");
  }
  if (find_vertex(id)) throw Error("duplicate vertex '" + id + "'");
  vertices_.push_back(std::move(id));
  return static_cast<VertexId>(vertices_.size() - 1);
}

EdgeId AmbientGraph::add_edge(std::string id, VertexId from, VertexId to) {
  if (id.empty() || id.front() == '@' || id.find('.') != std::string::npos) {
    throw Error("invalid edge id '" + id + "'");
  }
  if (find_edge(id)) throw Error("duplicate edge '" + id + "'");
  if (from >= vertices_.size() || to >= vertices_.size()) throw Error("edge '" + id + "' has an undeclared endpoint");
  edges_.push_back({std::move(id), from, to});
  return static_cast<EdgeId>(edges_.size() - 1);
}

void AmbientGraph::add_label(std::string name, ObjectLabel label) {
  for (const auto& [n, l] : labels_) {
    if (n == name) throw Error("duplicate label '" + name + "'");
  }
  for (VertexId v : label.vertices()) {
    if (v >= vertices_.size()) throw Error("label '" + name + "' has an undeclared vertex");
  }
  labels_.emplace_back(std::move(name), std::move(label));
}

std::optional<VertexId> AmbientGraph::find_vertex(const std::string& id) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<VertexId>(it - vertices_.begin());
}

std::optional<EdgeId> AmbientGraph::find_edge(const std::string& id) const {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].name == id) return static_cast<EdgeId>(e);
  }
  return std::nullopt;
}

VertexId AmbientGraph::vertex(const std::string& id) const {
  if (auto v = find_vertex(id)) return *v;
  throw Error("unknown vertex '" + id + "'");
}

const ObjectLabel& AmbientGraph::label(const std::string& name) const {
  for (const auto& [n, l] : labels_) {
    if (n == name) return l;
  }
  throw Error("unknown label '" + name + "'");
}

ObjectLabel AmbientGraph::all_vertices() const {
  std::set<VertexId> all;
  for (VertexId v = 0; v < vertices_.size(); ++v) all.insert(v);
  return ObjectLabel(std::move(all));
}

std::vector<EdgeId> AmbientGraph::out_edges(VertexId v) const {
  std::vector<EdgeId> out;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].from == v) out.push_back(static_cast<EdgeId>(e));
  }
  return out;
}

}  // namespace stringtop::graph
