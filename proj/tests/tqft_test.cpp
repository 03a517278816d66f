#include <doctest.h>

#include <random>

#include "stringtop/error.hpp"
#include "stringtop/tqft/bordism.hpp"
#include "stringtop/tqft/decomposition.hpp"
#include "stringtop/tqft/evaluate.hpp"
#include "stringtop/tqft/format.hpp"
#include "support.hpp"

using namespace stringtop;
using namespace stringtop::tqft;
using linear::Rational;
using test_support::reference;

namespace {

BordismDag sample(const char* name) { return load_bordism(test_support::data_path(std::string(name) + ".bdg")); }

FormalSum t(const Dialgebra& d, std::initializer_list<std::pair<std::vector<std::string>, Rational>> terms) {
  return FormalSum::of(d.basis, terms);
}

std::size_t parse_line(std::string_view text) {
  try {
    parse_bordism(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

std::string parse_message(std::string_view text) {
  try {
    parse_bordism(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("bordism validation") {
  CHECK_THROWS_AS(BordismDag("b", 0, 1), Error);
  CHECK_THROWS_AS(BordismDag("b", 1, 0), Error);

  BordismDag dangling("b", 1, 1);
  dangling.add_node("c", GeneratorKind::copants);
  dangling.add_wire(BordismDag::input(0), BordismDag::node_in(0, 0));
  dangling.add_wire(BordismDag::node_out(0, 0), BordismDag::output(0));
  CHECK_THROWS_WITH_AS(dangling.validate(), doctest::Contains("dangling"), Error);

  BordismDag cyclic("b", 1, 1);
  cyclic.add_node("p", GeneratorKind::pants);
  cyclic.add_node("c", GeneratorKind::copants);
  cyclic.add_wire(BordismDag::input(0), BordismDag::node_in(0, 0));
  cyclic.add_wire(BordismDag::node_out(1, 1), BordismDag::node_in(0, 1));
  cyclic.add_wire(BordismDag::node_out(0, 0), BordismDag::node_in(1, 0));
  cyclic.add_wire(BordismDag::node_out(1, 0), BordismDag::output(0));
  CHECK_THROWS_WITH_AS(cyclic.validate(), doctest::Contains("cycle"), Error);

  BordismDag b("b", 1, 1);
  CHECK_THROWS_AS(b.add_node("in", GeneratorKind::pants), Error);
  CHECK_THROWS_AS(b.add_node("a.b", GeneratorKind::pants), Error);
  b.add_node("c", GeneratorKind::cylinder);
  CHECK_THROWS_AS(b.add_node("c", GeneratorKind::pants), Error);
  CHECK_THROWS_AS(b.add_wire(BordismDag::output(0), BordismDag::node_in(0, 0)), Error);
}

TEST_CASE("bordism parse errors") {
  CHECK(parse_line("bordism b\nin 0\nout 1\n") == 2);
  CHECK(parse_message("bordism b\nin 0\nout 1\n").find("at least 1") != std::string::npos);
  CHECK(parse_line("bordism b\nin 1\nout 0\n") == 3);
  CHECK(parse_line("bordism b\nin 1\nout 1\nnode p hat\n") == 4);
  CHECK(parse_line("bordism b\nin 1\nout 1\nnode c cylinder\nwire in.0 c.in.0\nwire c.out.0 out.3\n") == 6);
  // Validation failures point at the last line.
  CHECK(parse_line("bordism b\nin 1\nout 1\nnode c cylinder\nwire in.0 c.in.0\n") == 5);
}

TEST_CASE("bordism text round-trips") {
  for (const auto& src : builtin::bordisms()) {
    const BordismDag b = parse_bordism(src.text);
    const std::string once = serialize_bordism(b);
    CHECK(parse_bordism(once) == b);
    CHECK(serialize_bordism(parse_bordism(once)) == once);
  }
}

TEST_CASE("topological type of the samples") {
  CHECK(type_of(sample("pants")) == TopologicalType{0, 2, 1});
  CHECK(type_of(sample("handle")) == TopologicalType{1, 1, 1});
  CHECK(type_of(sample("zigzag")) == TopologicalType{0, 2, 2});
  CHECK(type_of(sample("twisted")) == TopologicalType{0, 2, 1});

  BordismDag split("b", 2, 2);
  split.add_node("c1", GeneratorKind::cylinder);
  split.add_node("c2", GeneratorKind::cylinder);
  split.add_wire(BordismDag::input(0), BordismDag::node_in(0, 0));
  split.add_wire(BordismDag::input(1), BordismDag::node_in(1, 0));
  split.add_wire(BordismDag::node_out(0, 0), BordismDag::output(0));
  split.add_wire(BordismDag::node_out(1, 0), BordismDag::output(1));
  CHECK_FALSE(type_of(split).has_value());
}

TEST_CASE("generators evaluate to the structure maps") {
  const Dialgebra d = reference("dual-numbers");
  CHECK(evaluate(d, sample("pants"), t(d, {{{"e", "x"}, Rational(1)}})) == d.element("x"));
  CHECK(evaluate(d, normal_form({0, 1, 2}), d.element("e")) ==
        t(d, {{{"e", "x"}, Rational(1)}, {{"x", "e"}, Rational(1)}}));
  CHECK(evaluate(d, normal_form({0, 1, 1}), d.element("x")) == d.element("x"));
  CHECK(evaluate(d, sample("handle"), d.element("e")) == d.element("x", Rational(2)));
  CHECK(evaluate(d, sample("handle"), d.element("x")).is_zero());
  CHECK(evaluate(d, sample("zigzag"), t(d, {{{"e", "e"}, Rational(1)}})) ==
        t(d, {{{"e", "x"}, Rational(1)}, {{"x", "e"}, Rational(1)}}));
  CHECK_THROWS_AS(evaluate(d, sample("pants"), d.element("e")), Error);
}

TEST_CASE("twists carry Koszul signs on odd factors") {
  Dialgebra d("odd", linear::GradedBasis::make({{"u", 1}, {"v", 1}, {"w", 0}}));
  BordismDag tw("tw", 2, 2);
  tw.add_node("t", GeneratorKind::twist);
  tw.add_wire(BordismDag::input(0), BordismDag::node_in(0, 0));
  tw.add_wire(BordismDag::input(1), BordismDag::node_in(0, 1));
  tw.add_wire(BordismDag::node_out(0, 0), BordismDag::output(0));
  tw.add_wire(BordismDag::node_out(0, 1), BordismDag::output(1));
  CHECK(evaluate(d, tw, t(d, {{{"u", "v"}, Rational(1)}})) == t(d, {{{"v", "u"}, Rational(-1)}}));
  CHECK(evaluate(d, tw, t(d, {{{"u", "w"}, Rational(1)}})) == t(d, {{{"w", "u"}, Rational(1)}}));

  // Crossing the outputs in the wiring is the same graded swap.
  BordismDag crossed("x", 2, 2);
  crossed.add_node("a", GeneratorKind::cylinder);
  crossed.add_node("b", GeneratorKind::cylinder);
  crossed.add_wire(BordismDag::input(0), BordismDag::node_in(0, 0));
  crossed.add_wire(BordismDag::input(1), BordismDag::node_in(1, 0));
  crossed.add_wire(BordismDag::node_out(0, 0), BordismDag::output(1));
  crossed.add_wire(BordismDag::node_out(1, 0), BordismDag::output(0));
  CHECK(evaluate(d, crossed, t(d, {{{"u", "v"}, Rational(1)}})) == t(d, {{{"v", "u"}, Rational(-1)}}));
}

TEST_CASE("canonical evaluation") {
  const Dialgebra d = reference("dual-numbers");
  const auto id = canonical_eval(d, {0, 1, 1}, d.element("e"));
  CHECK(id.value == d.element("e"));
  CHECK_FALSE(id.warning);
  CHECK(canonical_eval(d, {1, 1, 1}, d.element("e")).value == d.element("x", Rational(2)));
  CHECK(canonical_eval(d, {1, 1, 1}, d.element("x")).value.is_zero());
  CHECK(canonical_eval(d, {0, 2, 1}, t(d, {{{"e", "e"}, Rational(1)}})).value == d.element("e"));
  CHECK(handle(d, d.element("e"), 2).is_zero());

  const auto warned = canonical_eval(reference("dual-numbers-mutated"), {1, 1, 1}, d.element("e"));
  CHECK(warned.warning.has_value());
}

TEST_CASE("normal forms have their type") {
  for (const auto& type : types_up_to(3, 4)) {
    const BordismDag b = normal_form(type);
    b.validate();
    CHECK(type_of(b) == type);
    CHECK(b.count(GeneratorKind::pants) == static_cast<std::size_t>(type.genus) + type.inputs - 1);
    CHECK(b.count(GeneratorKind::copants) == static_cast<std::size_t>(type.genus) + type.outputs - 1);
  }
}

TEST_CASE("random decompositions have the requested type and depend only on the seed") {
  for (const auto& type : types_up_to(2, 3)) {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      const BordismDag b = random_decomposition(type, seed);
      CHECK(type_of(b) == type);
      CHECK(b == random_decomposition(type, seed));
      if (type.genus == 0) {
        const BordismDag open = random_decomposition(type, seed, Sector::open);
        CHECK(type_of(open) == type);
        CHECK(open.count(GeneratorKind::twist) == 0);
      }
    }
  }
  CHECK_THROWS_AS(random_decomposition({1, 1, 1}, 0, Sector::open), Error);
  // Different seeds produce more than one shape.
  std::set<std::string> shapes;
  for (std::uint64_t seed = 0; seed < 20; ++seed) shapes.insert(serialize_bordism(random_decomposition({1, 2, 2}, seed)));
  CHECK(shapes.size() > 1);
}

TEST_CASE("both (0,2,2) routes agree on the dual numbers") {
  const Dialgebra d = reference("dual-numbers");
  const FormalSum ee = t(d, {{{"e", "e"}, Rational(1)}});
  const FormalSum expected = t(d, {{{"e", "x"}, Rational(1)}, {{"x", "e"}, Rational(1)}});
  CHECK(evaluate(d, normal_form({0, 2, 2}), ee) == expected);
  CHECK(evaluate(d, sample("zigzag"), ee) == expected);
  for (std::uint64_t seed = 0; seed < 10; ++seed) CHECK(evaluate(d, random_decomposition({0, 2, 2}, seed), ee) == expected);
}

TEST_CASE("evaluation is linear") {
  const Dialgebra d = reference("matrix2");
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coeff(-5, 5);
  const auto inputs = basis_inputs(d, 2);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const BordismDag b = random_decomposition({1, 2, 2}, seed);
    FormalSum v = d.zero();
    FormalSum expected(d.basis);
    for (const auto& in : inputs) {
      const Rational c(coeff(rng), 1 + (coeff(rng) + 5));
      v.add(in, c);
      expected.add(evaluate(d, b, in), c);
    }
    CHECK(evaluate(d, b, v) == expected);
    CHECK(evaluate(d, b, d.zero()).is_zero());
  }
}

TEST_CASE("gate and Frobenius move") {
  CHECK(gate_passed(gate_frobenius(reference("dual-numbers"))));
  CHECK(gate_passed(gate_frobenius(reference("zero"))));
  const auto mutated = gate_frobenius(reference("dual-numbers-mutated"));
  CHECK_FALSE(gate_passed(mutated));
  bool module_failed = false;
  for (const auto& r : mutated) module_failed = module_failed || (r.axiom == dialgebra::Axiom::module && !r.holds && r.witness);
  CHECK(module_failed);
  CHECK_FALSE(gate_passed(gate_frobenius(reference("matrix2"))));
  CHECK(gate_passed(gate_frobenius(reference("matrix2"), Sector::open)));

  CHECK(frobenius_move_property(reference("dual-numbers")).passed());
  CHECK(frobenius_move_property(reference("matrix2")).passed());
  CHECK_FALSE(frobenius_move_property(reference("dual-numbers-mutated")).passed());
}

TEST_CASE("invariance on Frobenius data, sensitivity without it") {
  InvarianceConfig config;
  config.genus_max = 1;
  config.ports_max = 2;
  config.samples = 6;
  const auto dual = run_invariance(reference("dual-numbers"), config, Execution::serial);
  CHECK(dual.gate_passed());
  CHECK(dual.invariant());

  config.sector = Sector::open;
  CHECK(run_invariance(reference("matrix2"), config, Execution::serial).invariant());
  config.sector = Sector::closed;

  InvarianceConfig wide;
  const auto serial = run_invariance(reference("dual-numbers-mutated"), wide, Execution::serial);
  const auto parallel = run_invariance(reference("dual-numbers-mutated"), wide, Execution::parallel);
  CHECK_FALSE(serial.gate_passed());
  REQUIRE_FALSE(serial.invariant());
  const auto x = serial.first_discrepancy();
  REQUIRE(x);
  CHECK_FALSE(x->normal_value == x->decomposed_value);
  // The discrepancy is reproducible from its seed.
  const Dialgebra m = reference("dual-numbers-mutated");
  linear::Tensor tuple;
  for (const auto& s : x->input) tuple.push_back(m.basis->index(s));
  const FormalSum in = FormalSum::basis_element(m.basis, tuple);
  CHECK(evaluate(m, random_decomposition(x->type, x->decomposition_seed), in) == x->decomposed_value);
  CHECK(canonical_eval(m, x->type, in).value == x->normal_value);

  REQUIRE(serial.types.size() == parallel.types.size());
  for (std::size_t i = 0; i < serial.types.size(); ++i) {
    CHECK(serial.types[i].mismatches == parallel.types[i].mismatches);
  }
  CHECK(format_discrepancy(*x) == format_discrepancy(*parallel.first_discrepancy()));
}
