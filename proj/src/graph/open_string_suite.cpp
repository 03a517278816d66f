#include "stringtop/graph/open_string_suite.hpp"

#include <array>
#include <functional>
#include <random>

namespace stringtop::graph {

namespace {

enum Check : std::size_t {
  kAssociativity,
  kUnit,
  kCutOfComposition,
  kDerivation,
  kDeformableOff,
  kFixedIndex,
  kCoassociativity,
  kCheckCount
};

constexpr std::array<const char*, kCheckCount> kCheckNames = {
    "associativity",
    "unit laws",
    "cut-of-composition identity",
    "derivation compatibility (junction off label)",
    "derivation compatibility and vanishing boundary cuts (endpoints off label)",
    "fixed-index cut",
    "coassociativity of double cuts",
};

struct Tally {
  std::array<std::size_t, kCheckCount> cases{};
  std::array<std::size_t, kCheckCount> failures{};
  std::array<std::optional<std::string>, kCheckCount> first{};

  template <class Describe>
  void record(Check c, bool ok, Describe&& describe) {
    ++cases[c];
    if (ok) return;
    ++failures[c];
    if (!first[c]) first[c] = describe();
  }
};

PathSum single(const GraphPath& p) { return PathSum::single(p); }

bool junction_is_interior(const GraphPath& p, const GraphPath& q) { return p.length() > 0 && q.length() > 0; }

Tally check_graph(const AmbientGraph& g, const OpenStringSuiteConfig& config, std::size_t graph_index) {
  Tally t;
  const auto paths = enumerate_paths(g, config.max_length);
  std::vector<std::vector<std::size_t>> starting_at(g.vertex_count());
  for (std::size_t i = 0; i < paths.size(); ++i) starting_at[paths[i].start].push_back(i);

  const ObjectLabel& label_b = g.label("B");
  const ObjectLabel& label_c = g.label("C");
  const ObjectLabel all = g.all_vertices();
  const std::array<const ObjectLabel*, 3> cut_labels = {&label_b, &label_c, &all};
  auto at = [&](const std::string& what) { return "graph #" + std::to_string(graph_index) + ": " + what; };

  for (const auto& p : paths) {
    auto ps = [&] { return format_path(g, p); };
    const VertexId pend = end_vertex(g, p);

    // Unit laws, with the tightest and the loosest labels.
    for (const ObjectLabel& left : {ObjectLabel{p.start}, all}) {
      for (const ObjectLabel& right : {ObjectLabel{pend}, all}) {
        const PathChain x(g, left, right, single(p));
        const bool ok = compose(g, identity(g, left), x) == x && compose(g, x, identity(g, right)) == x;
        t.record(kUnit, ok, [&] { return at("unit " + ps()); });
      }
    }

    // Double cuts against the direct enumeration.
    const PathTensor3 direct = double_cut(g, p, label_b, label_c);
    const bool coassoc = cut_then_cut_left(g, p, label_b, label_c) == direct &&
                         cut_then_cut_right(g, p, label_b, label_c) == direct;
    t.record(kCoassociativity, coassoc, [&] { return at("double cut " + ps()); });

    for (std::size_t qi : starting_at[pend]) {
      const GraphPath& q = paths[qi];
      auto pq = [&] { return ps() + " * " + format_path(g, q); };
      const PathSum composite = compose(g, p, q);

      for (std::size_t ri : starting_at[end_vertex(g, q)]) {
        const GraphPath& r = paths[ri];
        if (p.length() + q.length() + r.length() > config.max_triple_length) continue;
        const bool ok = compose(g, composite, single(r)) == compose(g, single(p), compose(g, q, r));
        t.record(kAssociativity, ok, [&] { return at("(" + pq() + ") * " + format_path(g, r)); });
      }

      const VertexId junction = pend;
      for (const ObjectLabel* label : cut_labels) {
        t.record(kCutOfComposition, cut_of_composition_defect(g, p, q, *label).empty(), [&] { return at("cut " + pq()); });

        PathTensor derivation = cut_interior(g, composite, *label);
        derivation -= compose(g, cut_interior(g, single(p), *label), single(q));
        derivation -= compose(g, single(p), cut_interior(g, single(q), *label));
        if (!label->contains(junction) || !junction_is_interior(p, q)) {
          t.record(kDerivation, derivation.empty(), [&] { return at("derivation " + pq()); });
        }
        const bool endpoints_off = !label->contains(p.start) && !label->contains(end_vertex(g, q));
        if (endpoints_off && !label->contains(junction)) {
          bool ok = derivation.empty();
          for (PathEnd which : {PathEnd::start, PathEnd::end}) {
            ok = ok && cut_boundary(g, single(p), which, *label).empty() &&
                 cut_boundary(g, single(q), which, *label).empty() &&
                 cut_boundary(g, composite, which, *label).empty();
          }
          t.record(kDeformableOff, ok, [&] { return at("deformable-off " + pq()); });
        }
      }

      const std::size_t m = p.length();
      const std::size_t n = q.length();
      for (const ObjectLabel* label : cut_labels) {
        for (std::size_t i = 1; i <= m + n; ++i) {
          const PathTensor lhs = cut_at_index(g, composite, i, *label);
          PathTensor rhs;
          if (i < m) {
            rhs = compose(g, cut_at_index(g, single(p), i, *label), single(q));
          } else if (i > m) {
            rhs = compose(g, single(p), cut_at_index(g, single(q), i - m, *label));
          } else {
            // The junction itself: the cut is p ⊗ q when it is interior and on the label.
            if (junction_is_interior(p, q) && label->contains(junction)) rhs.add({p, q}, Rational(1));
          }
          t.record(kFixedIndex, lhs == rhs, [&] { return at("cut at " + std::to_string(i) + " of " + pq()); });
        }
      }
    }
  }
  return t;
}

}  // namespace

AmbientGraph random_graph(std::uint64_t seed, std::size_t max_vertices, std::size_t max_edges) {
  std::mt19937_64 rng(seed);
  const std::size_t nv = std::uniform_int_distribution<std::size_t>(2, std::max<std::size_t>(2, max_vertices))(rng);
  const std::size_t ne = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, max_edges))(rng);
  AmbientGraph g("random-" + std::to_string(seed));
  for (std::size_t v = 0; v < nv; ++v) g.add_vertex(std::to_string(v + 1));
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(nv - 1));
  for (std::size_t e = 0; e < ne; ++e) {
    const VertexId from = pick(rng);
    const VertexId to = pick(rng);
    g.add_edge("e" + std::to_string(e + 1), from, to);
  }
  std::set<VertexId> b;
  std::set<VertexId> c;
  std::uniform_int_distribution<int> three(0, 2);
  for (VertexId v = 0; v < nv; ++v) {
    switch (three(rng)) {
      case 0: b.insert(v); break;
      case 1: c.insert(v); break;
      default: break;
    }
  }
  g.add_label("B", ObjectLabel(std::move(b)));
  g.add_label("C", ObjectLabel(std::move(c)));
  return g;
}

AmbientGraph rose_graph() {
  AmbientGraph g("rose");
  const VertexId v = g.add_vertex("v");
  g.add_edge("x", v, v);
  g.add_edge("y", v, v);
  g.add_label("V", ObjectLabel{v});
  return g;
}

std::vector<GraphPath> enumerate_paths(const AmbientGraph& g, std::size_t max_length) {
  std::vector<GraphPath> out;
  std::vector<std::vector<EdgeId>> out_edges(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) out_edges[v] = g.out_edges(v);
  std::vector<GraphPath> frontier;
  for (VertexId v = 0; v < g.vertex_count(); ++v) frontier.push_back(constant_path(v));
  for (std::size_t len = 0; len <= max_length; ++len) {
    out.insert(out.end(), frontier.begin(), frontier.end());
    if (len == max_length) break;
    std::vector<GraphPath> next;
    for (const auto& p : frontier) {
      for (EdgeId e : out_edges[end_vertex(g, p)]) {
        GraphPath q = p;
        q.edges.push_back(e);
        next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

PathTensor3 double_cut(const AmbientGraph& g, const GraphPath& p, const ObjectLabel& first,
                       const ObjectLabel& second) {
  PathTensor3 out;
  const auto vs = visited_vertices(g, p);
  const std::size_t k = p.length();
  for (std::size_t i = 1; i < k; ++i) {
    if (!first.contains(vs[i])) continue;
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!second.contains(vs[j])) continue;
      GraphPath middle{vs[i], std::vector<EdgeId>(p.edges.begin() + static_cast<std::ptrdiff_t>(i),
                                                  p.edges.begin() + static_cast<std::ptrdiff_t>(j))};
      out.add({prefix(g, p, i), std::move(middle), suffix(g, p, j)}, Rational(1));
    }
  }
  return out;
}

PathTensor3 cut_then_cut_left(const AmbientGraph& g, const GraphPath& p, const ObjectLabel& first,
                              const ObjectLabel& second) {
  PathTensor3 out;
  for (const auto& [ab, c] : cut_interior(g, PathSum::single(p), second)) {
    for (const auto& [xy, d] : cut_interior(g, PathSum::single(ab.first), first)) {
      out.add({xy.first, xy.second, ab.second}, c * d);
    }
  }
  return out;
}

PathTensor3 cut_then_cut_right(const AmbientGraph& g, const GraphPath& p, const ObjectLabel& first,
                               const ObjectLabel& second) {
  PathTensor3 out;
  for (const auto& [ab, c] : cut_interior(g, PathSum::single(p), first)) {
    for (const auto& [xy, d] : cut_interior(g, PathSum::single(ab.second), second)) {
      out.add({ab.first, xy.first, xy.second}, c * d);
    }
  }
  return out;
}

PathTensor cut_of_composition_defect(const AmbientGraph& g, const GraphPath& p, const GraphPath& q,
                                     const ObjectLabel& label) {
  const PathSum sp = PathSum::single(p);
  const PathSum sq = PathSum::single(q);
  PathTensor out = cut_interior(g, compose(g, sp, sq), label);
  if (end_vertex(g, p) != q.start) return out;
  out -= compose(g, cut_interior(g, sp, label), sq);
  out -= compose(g, sp, cut_interior(g, sq, label));
  if (junction_is_interior(p, q) && label.contains(q.start)) out.add({p, q}, Rational(-1));
  return out;
}

std::vector<PropertyResult> run_open_string_suite(const OpenStringSuiteConfig& config, Execution mode) {
  std::vector<Tally> per_graph(config.graphs);
  for_each_case(mode, config.graphs, [&](std::size_t i) {
    const AmbientGraph g = random_graph(case_seed(config.seed, i), config.max_vertices, config.max_edges);
    per_graph[i] = check_graph(g, config, i);
  });

  std::vector<PropertyResult> out;
  for (std::size_t c = 0; c < kCheckCount; ++c) {
    PropertyResult r;
    r.name = kCheckNames[c];
    for (auto& t : per_graph) {
      r.cases += t.cases[c];
      r.failures += t.failures[c];
      if (!r.first_failure && t.first[c]) r.first_failure = t.first[c];
    }
    out.push_back(std::move(r));
  }

  // Based loops at a single vertex: every pair composes, giving an
  // associative unital algebra.
  const AmbientGraph rose = rose_graph();
  const auto words = enumerate_paths(rose, config.max_length);
  const ObjectLabel point = rose.label("V");
  const std::size_t n = words.size();
  std::vector<PathChain> chains;
  for (const auto& w : words) chains.emplace_back(rose, point, point, PathSum::single(w));
  const PathChain e = identity(rose, point);
  out.push_back(run_property("pontryagin algebra on the rose", n * n * n, mode, [&](std::size_t i) -> std::optional<std::string> {
    const std::size_t a = i / (n * n);
    const std::size_t b = (i / n) % n;
    const std::size_t c = i % n;
    const PathChain& x = chains[a];
    const PathChain& y = chains[b];
    const PathChain& z = chains[c];
    const PathChain xy = compose(rose, x, y);
    bool ok = compose(rose, xy, z) == compose(rose, x, compose(rose, y, z)) && xy.terms().size() == 1;
    if (b == 0 && c == 0) ok = ok && compose(rose, e, x) == x && compose(rose, x, e) == x;
    if (ok) return std::nullopt;
    return format_path(rose, words[a]) + ", " + format_path(rose, words[b]) + ", " + format_path(rose, words[c]);
  }));
  return out;
}

}  // namespace stringtop::graph
