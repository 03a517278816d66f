#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stringtop/graph/ambient_graph.hpp"
#include "stringtop/linear/combination.hpp"

namespace stringtop::graph {

using linear::Combination;
using linear::Rational;

/// An edge path. Length zero is the constant path at `start`.
struct GraphPath {
  VertexId start = 0;
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
  friend auto operator<=>(const GraphPath&, const GraphPath&) = default;
  friend bool operator==(const GraphPath&, const GraphPath&) = default;
};

using PathSum = Combination<GraphPath>;
using PathTensor = Combination<std::pair<GraphPath, GraphPath>>;
using PathTensor3 = Combination<std::array<GraphPath, 3>>;

/// Throws stringtop::Error if consecutive edges do not compose or the
/// first edge does not leave `start`.
GraphPath make_path(const AmbientGraph& g, VertexId start, std::vector<EdgeId> edges);
GraphPath constant_path(VertexId v);
VertexId end_vertex(const AmbientGraph& g, const GraphPath& p);
/// v_0 ... v_k.
std::vector<VertexId> visited_vertices(const AmbientGraph& g, const GraphPath& p);

/// `e1.e2.e3`, or `@v` for a constant path.
GraphPath parse_path(const AmbientGraph& g, std::string_view text);
std::string format_path(const AmbientGraph& g, const GraphPath& p);
/// Terms `[p/q*]path` joined by `+`.
PathSum parse_path_sum(const AmbientGraph& g, std::string_view text);
std::string format_path_sum(const AmbientGraph& g, const PathSum& v);
std::string format_path_tensor(const AmbientGraph& g, const PathTensor& v);

/// An open string state: a sum of paths from `domain` to `codomain`.
class PathChain {
 public:
  /// Throws stringtop::Error if some path does not start in `domain` or
  /// end in `codomain`.
  PathChain(const AmbientGraph& g, ObjectLabel domain, ObjectLabel codomain, PathSum terms);

  const ObjectLabel& domain() const { return domain_; }
  const ObjectLabel& codomain() const { return codomain_; }
  const PathSum& terms() const { return terms_; }

  friend bool operator==(const PathChain&, const PathChain&) = default;

 private:
  ObjectLabel domain_;
  ObjectLabel codomain_;
  PathSum terms_;
};

/// Keeps the terms starting (resp. ending) in `sub`; `sub` must be contained
/// in the domain (resp. codomain).
PathChain restrict_start(const AmbientGraph& g, const PathChain& x, const ObjectLabel& sub);
PathChain restrict_end(const AmbientGraph& g, const PathChain& x, const ObjectLabel& sub);

/// Concatenation where endpoints meet, zero elsewhere. The codomain of `x`
/// must equal the domain of `y`.
PathChain compose(const AmbientGraph& g, const PathChain& x, const PathChain& y);
/// Bilinear concatenation of raw sums, without label bookkeeping.
PathSum compose(const AmbientGraph& g, const PathSum& x, const PathSum& y);
PathSum compose(const AmbientGraph& g, const GraphPath& p, const GraphPath& q);

/// (p⊗q)·r = p⊗(q·r).
PathTensor compose(const AmbientGraph& g, const PathTensor& t, const PathSum& r);
/// r·(p⊗q) = (r·p)⊗q.
PathTensor compose(const AmbientGraph& g, const PathSum& r, const PathTensor& t);

/// Sum over interior indices 0 < i < k with v_i in `label` of
/// (prefix to v_i) ⊗ (suffix from v_i).
PathTensor cut_interior(const AmbientGraph& g, const PathSum& x, const ObjectLabel& label);
/// The single cut at index i, when 0 < i < k and v_i lies in `label`.
PathTensor cut_at_index(const AmbientGraph& g, const PathSum& x, std::size_t index, const ObjectLabel& label);

enum class PathEnd { start, end };
/// const(v_0) ⊗ p when v_0 is in `label` (start), p ⊗ const(v_k) when v_k is (end).
PathTensor cut_boundary(const AmbientGraph& g, const PathSum& x, PathEnd which, const ObjectLabel& label);

/// Sum of the constant paths on `label`.
PathChain identity(const AmbientGraph& g, const ObjectLabel& label);

/// Prefix p[0, i] and suffix p[i, k].
GraphPath prefix(const AmbientGraph& g, const GraphPath& p, std::size_t i);
GraphPath suffix(const AmbientGraph& g, const GraphPath& p, std::size_t i);

}  // namespace stringtop::graph
