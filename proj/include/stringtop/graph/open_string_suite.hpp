#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "stringtop/graph/open_strings.hpp"
#include "stringtop/parallel.hpp"
#include "stringtop/property.hpp"

namespace stringtop::graph {

/// Random multigraph (loops allowed) with two disjoint labels `B` and `C`.
/// Vertex count in [2, max_vertices], edge count in [1, max_edges].
AmbientGraph random_graph(std::uint64_t seed, std::size_t max_vertices = 5, std::size_t max_edges = 8);

/// Every path of length 0..max_length, constant paths included.
std::vector<GraphPath> enumerate_paths(const AmbientGraph& g, std::size_t max_length);

/// Two-loop rose at a single vertex `v` (loops `x`, `y`).
AmbientGraph rose_graph();

/// Double cut at i < j with v_i in `first`, v_j in `second`, computed
/// directly from the vertex sequence.
PathTensor3 double_cut(const AmbientGraph& g, const GraphPath& p, const ObjectLabel& first, const ObjectLabel& second);
/// (cut_first ⊗ id) ∘ cut_second.
PathTensor3 cut_then_cut_left(const AmbientGraph& g, const GraphPath& p, const ObjectLabel& first,
                              const ObjectLabel& second);
/// (id ⊗ cut_second) ∘ cut_first.
PathTensor3 cut_then_cut_right(const AmbientGraph& g, const GraphPath& p, const ObjectLabel& first,
                               const ObjectLabel& second);

/// cut(p·q) − cut(p)·q − p·cut(q) − [junction interior and in L] p⊗q.
PathTensor cut_of_composition_defect(const AmbientGraph& g, const GraphPath& p, const GraphPath& q,
                                     const ObjectLabel& label);

struct OpenStringSuiteConfig {
  std::size_t graphs = 50;
  std::size_t max_vertices = 5;
  std::size_t max_edges = 8;
  std::size_t max_length = 4;
  // Associativity triples are further limited by their total length.
  std::size_t max_triple_length = 6;
  std::uint64_t seed = 19990301;
};

/// The open-string identities on seeded random graphs plus the Pontryagin
/// check on the two-loop rose.
std::vector<PropertyResult> run_open_string_suite(const OpenStringSuiteConfig& config,
                                                  Execution mode = Execution::parallel);

}  // namespace stringtop::graph
