#include <doctest.h>

#include <random>

#include "stringtop/dialgebra/axioms.hpp"
#include "stringtop/dialgebra/format.hpp"
#include "stringtop/error.hpp"
#include "support.hpp"

using namespace stringtop;
using namespace stringtop::dialgebra;
using test_support::reference;

namespace {

// a + b·x in Q[x]/x², multiplied directly.
struct Dual {
  Rational a, b;
};
Dual dual_mul(const Dual& u, const Dual& v) { return {u.a * v.a, u.a * v.b + u.b * v.a}; }

FormalSum as_sum(const Dialgebra& d, const Dual& u) {
  FormalSum out = d.zero();
  out.add(d.element("e"), u.a);
  out.add(d.element("x"), u.b);
  return out;
}

std::set<std::string> cell_names(const Classification& c) {
  std::set<std::string> out;
  for (Cell cell : c.cells) out.insert(cell_name(cell));
  return out;
}

const AxiomReport& report_for(const Classification& c, Axiom a) {
  for (const auto& r : c.reports) {
    if (r.axiom == a) return r;
  }
  throw Error("axiom not consulted");
}

}  // namespace

TEST_CASE("dual numbers multiply like a + bx with x^2 = 0") {
  const Dialgebra d = reference("dual-numbers");
  CHECK(multiply(d, d.element("e"), d.element("x")) == d.element("x"));
  CHECK(multiply(d, d.element("x"), d.element("x")).is_zero());
  CHECK(multiply(d, d.element("x"), d.zero()).is_zero());
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int i = 0; i < 200; ++i) {
    const Dual u{Rational(coeff(rng), 1 + (coeff(rng) + 9)), Rational(coeff(rng))};
    const Dual v{Rational(coeff(rng)), Rational(coeff(rng), 3)};
    CHECK(multiply(d, as_sum(d, u), as_sum(d, v)) == as_sum(d, dual_mul(u, v)));
  }
}

TEST_CASE("dual numbers comultiply through the pairing") {
  const Dialgebra d = reference("dual-numbers");
  CHECK(comultiply(d, d.element("e")) ==
        linear::FormalSum::of(d.basis, {{{"e", "x"}, Rational(1)}, {{"x", "e"}, Rational(1)}}));
  CHECK(comultiply(d, d.element("x")) == linear::FormalSum::of(d.basis, {{{"x", "x"}, Rational(1)}}));
  CHECK(comultiply(d, d.zero()).is_zero());
}

TEST_CASE("module compatibility on the dual numbers and its mutation") {
  CHECK(check(reference("dual-numbers"), Axiom::module).holds);

  const Dialgebra m = reference("dual-numbers-mutated");
  const AxiomReport r = check(m, Axiom::module);
  REQUIRE_FALSE(r.holds);
  REQUIRE(r.witness);
  // The first failing tuple in basis order.
  CHECK(r.witness->inputs == std::vector<std::string>{"e", "x"});
  // The tuple (x, x) fails as well: ∨(x·x) = 0 while x·∨(x) = x⊗e.
  const std::vector<std::string> xx{"x", "x"};
  const auto sides = evaluate_sides(m, Axiom::module, xx);
  REQUIRE(sides.size() >= 2);
  CHECK(sides[0].value.is_zero());
  bool some_side_is_x_e = false;
  for (const auto& s : sides) {
    some_side_is_x_e = some_side_is_x_e || s.value == linear::FormalSum::of(m.basis, {{{"x", "e"}, Rational(1)}});
  }
  CHECK(some_side_is_x_e);
}

TEST_CASE("witnesses reproduce the inequality") {
  for (const auto& src : builtin::dialgebras()) {
    const Dialgebra d = parse_dialgebra(src.text);
    for (const auto& r : check_all(d, all_axioms())) {
      if (r.holds) continue;
      REQUIRE(r.witness);
      const auto sides = evaluate_sides(d, r.axiom, r.witness->inputs);
      bool differ = false;
      for (const auto& s : sides) differ = differ || !(s.value == sides.front().value);
      CHECK_MESSAGE(differ, src.name << " " << axiom_name(r.axiom));
    }
  }
}

TEST_CASE("derivation fails on the dual numbers at (e, e)") {
  const Dialgebra d = reference("dual-numbers");
  const AxiomReport r = check(d, Axiom::derivation);
  REQUIRE_FALSE(r.holds);
  CHECK(r.witness->inputs == std::vector<std::string>{"e", "e"});
  const std::vector<std::string> ee{"e", "e"};
  const auto sides = evaluate_sides(d, Axiom::derivation, ee);
  REQUIRE(sides.size() == 2);
  CHECK(sides[1].value == combine(sides[0].value, sides[0].value, Rational(1), Rational(1)));
}

TEST_CASE("idempotent coproduct fails derivation at (p1, p1)") {
  const Dialgebra d = reference("idempotents");
  const AxiomReport r = check(d, Axiom::derivation);
  REQUIRE_FALSE(r.holds);
  CHECK(r.witness->inputs == std::vector<std::string>{"p1", "p1"});
  CHECK(check(d, Axiom::module).holds);
}

TEST_CASE("zero structures satisfy everything") {
  for (const char* name : {"zero", "lie-zero"}) {
    const Dialgebra d = reference(name);
    CHECK(check(d, Axiom::drinfeld).holds);
    CHECK(classify(d).cells.size() == 6);
  }
}

TEST_CASE("classification of the reference dialgebras") {
  const auto dual = classify(reference("dual-numbers"));
  CHECK(cell_names(dual) == std::set<std::string>{"associative/module", "commutative/module"});
  CHECK_FALSE(report_for(dual, Axiom::derivation).holds);

  const auto lie = classify(reference("lie-2d"));
  CHECK(cell_names(lie).count("lie/derivation") == 1);
  CHECK(report_for(lie, Axiom::jacobi).holds);
  CHECK(report_for(lie, Axiom::drinfeld).holds);

  const auto matrix = classify(reference("matrix2"));
  CHECK(cell_names(matrix) == std::set<std::string>{"associative/module"});
}

TEST_CASE("parallel and serial checks agree") {
  for (const auto& src : builtin::dialgebras()) {
    const Dialgebra d = parse_dialgebra(src.text);
    const auto a = check_all(d, all_axioms(), Execution::serial);
    const auto b = check_all(d, all_axioms(), Execution::parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].holds == b[i].holds);
      CHECK((a[i].witness.has_value() && a[i].witness->inputs == b[i].witness->inputs) == !a[i].holds);
    }
  }
}

TEST_CASE("Koszul derivation flag agrees with the plain rule in degree zero") {
  const Dialgebra d = reference("dual-numbers");
  CHECK(check(d, Axiom::derivation, {.koszul_derivation = true}).witness->inputs ==
        check(d, Axiom::derivation).witness->inputs);
}

TEST_CASE("dialgebra parse errors carry line numbers") {
  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      parse_dialgebra(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("dialgebra d\nbasis e deg 0\nprod e e -> q : 1/1\n") == 3);
  CHECK(line_of("dialgebra d\nbasis e deg zero\n") == 2);
  CHECK(line_of("# comment\n\nbogus\n") == 3);
  CHECK(line_of("dialgebra d\nbasis e deg 0\nbasis e deg 0\n") == 3);
  CHECK(line_of("dialgebra d\nbasis e deg 0\ncoprod e -> e e : 1/0\n") == 3);
  CHECK(line_of("dialgebra d\nbasis e deg 0\nunit f\n") == 3);
  CHECK(line_of("dialgebra d\nbasis e deg 0\nbasis y deg 1\nprod e e -> y : 1/1\n") > 0);
}

TEST_CASE("dialgebra text round-trips") {
  for (const auto& src : builtin::dialgebras()) {
    const Dialgebra d = parse_dialgebra(src.text);
    const std::string once = serialize_dialgebra(d);
    const Dialgebra again = parse_dialgebra(once);
    CHECK(again == d);
    CHECK(serialize_dialgebra(again) == once);
  }
}

TEST_CASE("axiom names parse back") {
  for (Axiom a : all_axioms()) CHECK(parse_axiom(axiom_name(a)) == a);
  CHECK_THROWS_AS(parse_axiom("nonsense"), Error);
}
