#include <doctest.h>

#include "stringtop/error.hpp"
#include "stringtop/graph/format.hpp"
#include "stringtop/graph/open_string_suite.hpp"
#include "stringtop/graph/open_strings.hpp"
#include "support.hpp"

using namespace stringtop;
using namespace stringtop::graph;

namespace {

AmbientGraph square() { return load_graph(test_support::data_path("square.graph")); }

AmbientGraph loop_graph() {
  return parse_graph("graph loop\nvertex v\nedge l v v\nlabel V v\n");
}

PathSum sum(const AmbientGraph& g, std::string_view text) { return parse_path_sum(g, text); }

PathTensor pair(const AmbientGraph& g, std::string_view p, std::string_view q) {
  return PathTensor::single({parse_path(g, p), parse_path(g, q)});
}

ObjectLabel label(const AmbientGraph& g, std::initializer_list<const char*> names) {
  std::set<VertexId> vs;
  for (const char* n : names) vs.insert(g.vertex(n));
  return ObjectLabel(std::move(vs));
}

}  // namespace

TEST_CASE("paths parse and format") {
  const AmbientGraph g = square();
  CHECK(format_path(g, parse_path(g, "a.b.c")) == "a.b.c");
  CHECK(format_path(g, parse_path(g, "@3")) == "@3");
  CHECK_THROWS_AS(parse_path(g, "a.c"), Error);
  CHECK_THROWS_AS(parse_path(g, "z"), Error);
  CHECK_THROWS_AS(parse_path(g, "@9"), Error);
  CHECK(format_path_sum(g, sum(g, "2*a+1/2*s")) == "2/1 a\n1/2 s\n");
}

TEST_CASE("restriction") {
  const AmbientGraph g = square();
  const ObjectLabel a = g.label("A");
  const PathChain p(g, a, g.all_vertices(), sum(g, "a"));
  CHECK(restrict_start(g, p, label(g, {"1"})).terms() == sum(g, "a"));
  CHECK(restrict_start(g, p, label(g, {"4"})).terms().empty());
  const PathChain pq(g, a, g.all_vertices(), sum(g, "a+d"));
  CHECK(restrict_start(g, pq, label(g, {"4"})).terms() == sum(g, "d"));
  CHECK_THROWS_AS(restrict_start(g, p, label(g, {"2"})), Error);
  CHECK(restrict_end(g, pq, label(g, {"1"})).terms() == sum(g, "d"));
}

TEST_CASE("composition") {
  const AmbientGraph g = square();
  const ObjectLabel all = g.all_vertices();
  auto chain = [&](std::string_view text) { return PathChain(g, all, all, sum(g, text)); };
  CHECK(compose(g, chain("a"), chain("b")).terms() == sum(g, "a.b"));
  CHECK(compose(g, chain("a"), chain("d")).terms().empty());
  CHECK(compose(g, chain("a+s"), chain("b")).terms() == sum(g, "a.b"));
  const PathChain narrow(g, label(g, {"1"}), label(g, {"2"}), sum(g, "a"));
  CHECK_THROWS_AS(compose(g, narrow, chain("b")), Error);
  CHECK_THROWS_AS(PathChain(g, label(g, {"2"}), all, sum(g, "a")), Error);
}

TEST_CASE("interior and fixed-index cuts") {
  const AmbientGraph g = square();
  CHECK(cut_interior(g, sum(g, "a.b"), label(g, {"2"})) == pair(g, "a", "b"));
  CHECK(cut_interior(g, sum(g, "a.b"), label(g, {"1"})).empty());
  CHECK(cut_at_index(g, sum(g, "a.b"), 1, label(g, {"2"})) == pair(g, "a", "b"));
  CHECK(cut_at_index(g, sum(g, "a.b"), 1, label(g, {"3"})).empty());

  const AmbientGraph loop = loop_graph();
  const ObjectLabel v = loop.label("V");
  CHECK(cut_interior(loop, sum(loop, "l.l.l"), v) == pair(loop, "l", "l.l") + pair(loop, "l.l", "l"));
  CHECK(cut_at_index(loop, sum(loop, "l.l.l"), 2, v) == pair(loop, "l.l", "l"));
}

TEST_CASE("boundary cuts") {
  const AmbientGraph g = square();
  CHECK(cut_boundary(g, sum(g, "a"), PathEnd::start, label(g, {"1"})) == pair(g, "@1", "a"));
  CHECK(cut_boundary(g, sum(g, "a"), PathEnd::start, label(g, {"2"})).empty());
  CHECK(cut_boundary(g, sum(g, "a"), PathEnd::end, label(g, {"2"})) == pair(g, "a", "@2"));
}

TEST_CASE("identities") {
  const AmbientGraph g = square();
  const PathChain p(g, label(g, {"1"}), label(g, {"2"}), sum(g, "a"));
  CHECK(compose(g, identity(g, label(g, {"1"})), p) == p);
  const PathChain wide(g, label(g, {"1"}), label(g, {"2", "3"}), sum(g, "a"));
  CHECK(compose(g, wide, identity(g, label(g, {"2", "3"}))) == wide);
  CHECK(identity(g, ObjectLabel{}).terms().empty());
}

TEST_CASE("cut of a composite picks up the junction term exactly when it is on the label") {
  const AmbientGraph g = square();
  const GraphPath p = parse_path(g, "a.b");
  const GraphPath q = parse_path(g, "c.d");
  CHECK(cut_of_composition_defect(g, p, q, label(g, {"3"})).empty());
  CHECK(cut_of_composition_defect(g, p, q, g.all_vertices()).empty());
  // Without the junction term the identity is off by exactly p⊗q.
  const PathSum sp = PathSum::single(p);
  const PathSum sq = PathSum::single(q);
  PathTensor naive = cut_interior(g, compose(g, sp, sq), label(g, {"3"}));
  naive -= compose(g, cut_interior(g, sp, label(g, {"3"})), sq);
  naive -= compose(g, sp, cut_interior(g, sq, label(g, {"3"})));
  CHECK(naive == PathTensor::single({p, q}));
}

TEST_CASE("double cuts are coassociative") {
  const AmbientGraph g = square();
  const GraphPath p = parse_path(g, "a.b.c.d.a.b.c");
  const ObjectLabel b = g.label("B");
  const ObjectLabel c = g.label("C");
  const PathTensor3 direct = double_cut(g, p, b, c);
  CHECK(direct.size() == 3);
  CHECK(cut_then_cut_left(g, p, b, c) == direct);
  CHECK(cut_then_cut_right(g, p, b, c) == direct);
}

TEST_CASE("path enumeration") {
  const AmbientGraph loop = loop_graph();
  CHECK(enumerate_paths(loop, 4).size() == 5);
  const AmbientGraph rose = rose_graph();
  CHECK(enumerate_paths(rose, 2).size() == 1 + 2 + 4);
}

TEST_CASE("graph format round-trips and reports line numbers") {
  for (const auto& src : builtin::graphs()) {
    const AmbientGraph g = parse_graph(src.text);
    const std::string once = serialize_graph(g);
    CHECK(same_structure(parse_graph(once), g));
    CHECK(serialize_graph(parse_graph(once)) == once);
  }
  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("graph g\nvertex 1\nedge a 1 2\n") == 3);
  CHECK(line_of("graph g\nvertex 1\nvertex 1\n") == 3);
  CHECK(line_of("graph g\nvertex 1\nlabel L 7\n") == 3);
  CHECK(line_of("graph g\nvertex 1\nwhat\n") == 3);
}

TEST_CASE("small open-string suite passes identically in both modes") {
  OpenStringSuiteConfig config;
  config.graphs = 6;
  config.max_length = 3;
  const auto serial = run_open_string_suite(config, Execution::serial);
  const auto parallel = run_open_string_suite(config, Execution::parallel);
  CHECK(all_passed(serial));
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(format_property(serial[i]) == format_property(parallel[i]));
  }
}

TEST_CASE("random graphs keep their labels disjoint and are seed-deterministic") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const AmbientGraph g = random_graph(seed);
    CHECK(g.label("B").disjoint_from(g.label("C")));
    CHECK(g.vertex_count() <= 5);
    CHECK(g.edge_count() <= 8);
    CHECK(serialize_graph(g) == serialize_graph(random_graph(seed)));
  }
}
