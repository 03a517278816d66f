#include "stringtop/graph/open_strings.hpp"

#include <sstream>

#include "stringtop/error.hpp"

namespace stringtop::graph {

GraphPath make_path(const AmbientGraph& g, VertexId start, std::vector<EdgeId> edges) {
  if (start >= g.vertex_count()) throw Error("path starts at an undeclared vertex");
  VertexId at = start;
  for (EdgeId e : edges) {
    if (e >= g.edge_count()) throw Error("path uses an undeclared edge");
    if (g.edge(e).from != at) throw Error("edge '" + g.edge(e).name + "' does not continue the path");
    at = g.edge(e).to;
  }
  return GraphPath{start, std::move(edges)};
}

GraphPath constant_path(VertexId v) { return GraphPath{v, {}}; }

VertexId end_vertex(const AmbientGraph& g, const GraphPath& p) {
  return p.edges.empty() ? p.start : g.edge(p.edges.back()).to;
}

std::vector<VertexId> visited_vertices(const AmbientGraph& g, const GraphPath& p) {
  std::vector<VertexId> out{p.start};
  for (EdgeId e : p.edges) out.push_back(g.edge(e).to);
  return out;
}

GraphPath prefix(const AmbientGraph& g, const GraphPath& p, std::size_t i) {
  (void)g;
  return GraphPath{p.start, std::vector<EdgeId>(p.edges.begin(), p.edges.begin() + static_cast<std::ptrdiff_t>(i))};
}

GraphPath suffix(const AmbientGraph& g, const GraphPath& p, std::size_t i) {
  const VertexId start = i == 0 ? p.start : g.edge(p.edges[i - 1]).to;
  return GraphPath{start, std::vector<EdgeId>(p.edges.begin() + static_cast<std::ptrdiff_t>(i), p.edges.end())};
}

GraphPath parse_path(const AmbientGraph& g, std::string_view text) {
  if (text.empty()) throw Error("empty path");
  if (text.front() == '@') return constant_path(g.vertex(std::string(text.substr(1))));
  std::vector<EdgeId> edges;
  std::size_t pos = 0;
  while (true) {
    const auto dot = text.find('.', pos);
    const std::string id(text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos));
    auto e = g.find_edge(id);
    if (!e) throw Error("unknown edge '" + id + "'");
    edges.push_back(*e);
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  const VertexId start = g.edge(edges.front()).from;
  return make_path(g, start, std::move(edges));
}

std::string format_path(const AmbientGraph& g, const GraphPath& p) {
  if (p.edges.empty()) return "@" + g.vertex_name(p.start);
  std::string out;
  for (std::size_t k = 0; k < p.edges.size(); ++k) {
    if (k) out.push_back('.');
    out += g.edge(p.edges[k]).name;
  }
  return out;
}

PathSum parse_path_sum(const AmbientGraph& g, std::string_view text) {
  PathSum out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto plus = text.find('+', pos);
    std::string_view term = text.substr(pos, plus == std::string_view::npos ? std::string_view::npos : plus - pos);
    Rational coeff(1);
    if (auto star = term.find('*'); star != std::string_view::npos) {
      coeff = Rational::parse(term.substr(0, star));
      term = term.substr(star + 1);
    }
    out.add(parse_path(g, term), coeff);
    if (plus == std::string_view::npos) break;
    pos = plus + 1;
  }
  return out;
}

std::string format_path_sum(const AmbientGraph& g, const PathSum& v) {
  if (v.empty()) return "(empty)\n";
  std::ostringstream os;
  for (const auto& [p, c] : v) os << c << ' ' << format_path(g, p) << '\n';
  return os.str();
}

std::string format_path_tensor(const AmbientGraph& g, const PathTensor& v) {
  if (v.empty()) return "(empty)\n";
  std::ostringstream os;
  for (const auto& [pq, c] : v) {
    os << c << ' ' << format_path(g, pq.first) << " (x) " << format_path(g, pq.second) << '\n';
  }
  return os.str();
}

PathChain::PathChain(const AmbientGraph& g, ObjectLabel domain, ObjectLabel codomain, PathSum terms)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), terms_(std::move(terms)) {
  for (const auto& [p, c] : terms_) {
    if (!domain_.contains(p.start)) throw Error("path " + format_path(g, p) + " does not start in the domain label");
    if (!codomain_.contains(end_vertex(g, p))) {
      throw Error("path " + format_path(g, p) + " does not end in the codomain label");
    }
  }
}

PathChain restrict_start(const AmbientGraph& g, const PathChain& x, const ObjectLabel& sub) {
  if (!sub.subset_of(x.domain())) throw Error("restriction label is not contained in the domain");
  PathSum kept;
  for (const auto& [p, c] : x.terms()) {
    if (sub.contains(p.start)) kept.add(p, c);
  }
  return PathChain(g, sub, x.codomain(), std::move(kept));
}

PathChain restrict_end(const AmbientGraph& g, const PathChain& x, const ObjectLabel& sub) {
  if (!sub.subset_of(x.codomain())) throw Error("restriction label is not contained in the codomain");
  PathSum kept;
  for (const auto& [p, c] : x.terms()) {
    if (sub.contains(end_vertex(g, p))) kept.add(p, c);
  }
  return PathChain(g, x.domain(), sub, std::move(kept));
}

PathSum compose(const AmbientGraph& g, const GraphPath& p, const GraphPath& q) {
  PathSum out;
  if (end_vertex(g, p) != q.start) return out;
  GraphPath pq = p;
  pq.edges.insert(pq.edges.end(), q.edges.begin(), q.edges.end());
  out.add(pq, Rational(1));
  return out;
}

PathSum compose(const AmbientGraph& g, const PathSum& x, const PathSum& y) {
  return linear::extend_bilinearly(x, y, [&](const GraphPath& p, const GraphPath& q) { return compose(g, p, q); });
}

PathChain compose(const AmbientGraph& g, const PathChain& x, const PathChain& y) {
  if (!(x.codomain() == y.domain())) throw Error("label mismatch: codomain of the first state is not the domain of the second");
  return PathChain(g, x.domain(), y.codomain(), compose(g, x.terms(), y.terms()));
}

PathTensor compose(const AmbientGraph& g, const PathTensor& t, const PathSum& r) {
  PathTensor out;
  for (const auto& [pq, c] : t) {
    for (const auto& [s, d] : r) {
      for (const auto& [qs, e] : compose(g, pq.second, s)) out.add({pq.first, qs}, c * d * e);
    }
  }
  return out;
}

PathTensor compose(const AmbientGraph& g, const PathSum& r, const PathTensor& t) {
  PathTensor out;
  for (const auto& [s, d] : r) {
    for (const auto& [pq, c] : t) {
      for (const auto& [sp, e] : compose(g, s, pq.first)) out.add({sp, pq.second}, c * d * e);
    }
  }
  return out;
}

PathTensor cut_interior(const AmbientGraph& g, const PathSum& x, const ObjectLabel& label) {
  PathTensor out;
  for (const auto& [p, c] : x) {
    const auto vs = visited_vertices(g, p);
    for (std::size_t i = 1; i + 1 < vs.size(); ++i) {
      if (label.contains(vs[i])) out.add({prefix(g, p, i), suffix(g, p, i)}, c);
    }
  }
  return out;
}

PathTensor cut_at_index(const AmbientGraph& g, const PathSum& x, std::size_t index, const ObjectLabel& label) {
  PathTensor out;
  for (const auto& [p, c] : x) {
    if (index == 0 || index >= p.length()) continue;
    const VertexId v = g.edge(p.edges[index - 1]).to;
    if (label.contains(v)) out.add({prefix(g, p, index), suffix(g, p, index)}, c);
  }
  return out;
}

PathTensor cut_boundary(const AmbientGraph& g, const PathSum& x, PathEnd which, const ObjectLabel& label) {
  PathTensor out;
  for (const auto& [p, c] : x) {
    if (which == PathEnd::start) {
      if (label.contains(p.start)) out.add({constant_path(p.start), p}, c);
    } else {
      const VertexId v = end_vertex(g, p);
      if (label.contains(v)) out.add({p, constant_path(v)}, c);
    }
  }
  return out;
}

PathChain identity(const AmbientGraph& g, const ObjectLabel& label) {
  PathSum terms;
  for (VertexId v : label.vertices()) terms.add(constant_path(v), Rational(1));
  return PathChain(g, label, label, std::move(terms));
}

}  // namespace stringtop::graph
