#include <doctest.h>

#include "stringtop/error.hpp"
#include "stringtop/surface/bialgebra_suite.hpp"
#include "stringtop/surface/goldman.hpp"
#include "stringtop/surface/surface_symbol.hpp"
#include "stringtop/surface/words.hpp"

using namespace stringtop;
using namespace stringtop::surface;

namespace {

CyclicWord word(std::string_view text) {
  auto w = CyclicWord::parse(text);
  REQUIRE(w);
  return *w;
}

std::vector<Letter> take(const Ray& r, std::size_t n) {
  std::vector<Letter> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(r.at(k));
  return out;
}

CyclicWord power(std::string_view letter, int k) {
  std::string s;
  for (int i = 0; i < k; ++i) s += letter;
  return word(s);
}

}  // namespace

TEST_CASE("cyclic reduction") {
  CHECK(word("abB").to_string() == "a");
  CHECK_FALSE(CyclicWord::parse("aBbA"));
  CHECK(word("ba").to_string() == "ab");
  CHECK(word("Aba").to_string() == "b");
  CHECK(word("abab").period() == 2);
  CHECK_THROWS_AS(parse_letters("a1"), Error);
}

TEST_CASE("surface symbols and their topology") {
  auto topo = [](std::string_view text) {
    const auto t = surface_from_symbol(SurfaceSymbol::parse(text));
    return std::pair{t.genus, t.boundary};
  };
  CHECK(topo("abAB") == std::pair{1, 1});
  CHECK(topo("aAbB") == std::pair{0, 3});
  CHECK(topo("aA") == std::pair{0, 2});
  CHECK(topo("a,b,A,B") == std::pair{1, 1});
  CHECK(SurfaceSymbol::preset("torus-1") == SurfaceSymbol::parse("abAB"));
  const auto pants = surface_from_symbol(SurfaceSymbol::preset("pants"));
  CHECK(pants.genus == 0);
  CHECK(pants.boundary == 3);
  CHECK_THROWS_AS(SurfaceSymbol::parse("abA"), Error);
  CHECK_THROWS_AS(SurfaceSymbol::parse("aaA"), Error);
  CHECK_THROWS_AS(SurfaceSymbol::preset("klein"), Error);
}

TEST_CASE("strands") {
  const CyclicWord ab = word("ab");
  CHECK(letters_to_string(take(strand(ab, 0, Direction::forward), 4)) == "abab");
  CHECK(letters_to_string(take(strand(ab, 0, Direction::backward), 4)) == "BABA");
  CHECK(letters_to_string(take(strand(word("a"), 0, Direction::backward), 3)) == "AAA");
}

TEST_CASE("linking at the rose vertex") {
  const SurfaceSymbol s = SurfaceSymbol::preset("torus-1");
  const CyclicWord a = word("a");
  const CyclicWord b = word("b");
  const CyclicWord ab = word("ab");
  CHECK(linked(s, {strand(a, 0, Direction::forward), strand(a, 0, Direction::backward),
                   strand(b, 0, Direction::forward), strand(b, 0, Direction::backward)}) == Linking::positive);
  CHECK(crossing(s, ab, 0, ab, 1) == Linking::unlinked);
  CHECK(crossing(s, a, 0, a, 0) == Linking::unlinked);
}

TEST_CASE("Goldman bracket pilot values") {
  const SurfaceSymbol s = SurfaceSymbol::preset("torus-1");
  CHECK(bracket(s, word("a"), word("b")) == ClosedStateSum::single(word("ab")));
  CHECK(bracket(s, word("b"), word("a")) == ClosedStateSum::single(word("ab"), Rational(-1)));
  CHECK(bracket(s, word("a"), word("a")).empty());
  CHECK(bracket(s, ClosedStateSum::single(word("a")), ClosedStateSum{}).empty());
  CHECK(intersection_count(s, word("a"), word("b")) == 1);
  CHECK(intersection_count(s, word("a"), word("a")) == 0);
  CHECK(intersection_count(s, word("ab"), word("ab")) == 0);
  CHECK(format_sum(bracket(s, word("a"), word("b"))) == "1/1 ab\n");
}

TEST_CASE("bracket of powers of the core curves") {
  // a^p and b^q meet in p·q points, all with the same sign, and every
  // resolution gives the class of a^p b^q.
  const SurfaceSymbol s = SurfaceSymbol::preset("torus-1");
  for (int p = 1; p <= 3; ++p) {
    for (int q = 1; q <= 3; ++q) {
      const CyclicWord ap = power("a", p);
      const CyclicWord bq = power("b", q);
      std::string prod;
      for (int i = 0; i < p; ++i) prod += "a";
      for (int i = 0; i < q; ++i) prod += "b";
      CHECK(intersection_count(s, ap, bq) == static_cast<std::size_t>(p * q));
      CHECK(bracket(s, ap, bq) == ClosedStateSum::single(word(prod), Rational(p * q)));
    }
  }
}

TEST_CASE("cobracket vanishes on simple curves") {
  const SurfaceSymbol s = SurfaceSymbol::preset("torus-1");
  for (const char* w : {"a", "b", "ab", "aB", "abb", "A"}) {
    CHECK_MESSAGE(cobracket(s, word(w)).empty(), w);
  }
  CHECK(cobracket(s, ClosedStateSum{}).empty());
  CHECK(format_tensor(cobracket(s, word("ab"))) == "(empty)\n");
}

TEST_CASE("cobracket is antisymmetric on a self-intersecting curve") {
  const SurfaceSymbol s = SurfaceSymbol::preset("torus-1");
  const CyclicWord w = word("aabAB");
  CHECK(coantisymmetry_defect(s, w).empty());
  CHECK(intersection_count(s, w, w) > 0);
}

TEST_CASE("marking and erasing") {
  const MarkedSum ab = mark_all(word("ab"));
  CHECK(ab.size() == 2);
  CHECK(ab.coefficient(LinearWord{parse_letters("ba")}) == Rational(1));
  CHECK(mark_all(word("aa")) == MarkedSum::single(LinearWord{parse_letters("aa")}, Rational(2)));
  CHECK(erase_mark(LinearWord{parse_letters("ba")}) == ClosedStateSum::single(word("ab")));
  CHECK(erase_mark(LinearWord{parse_letters("aA")}).empty());
}

TEST_CASE("word enumeration counts cyclic classes") {
  const SurfaceSymbol s = SurfaceSymbol::preset("torus-1");
  // Cyclically reduced conjugacy classes in F2: 4 of length 1, 8 of length 2.
  CHECK(enumerate_cyclic_words(s, 1).size() == 4);
  CHECK(enumerate_cyclic_words(s, 2).size() == 12);
}

TEST_CASE("small bialgebra suite passes identically in both modes") {
  BialgebraSuiteConfig config;
  config.exhaustive_max_length = 2;
  config.random_max_length = 5;
  config.samples = 20;
  for (const char* preset : {"torus-1", "pants"}) {
    const SurfaceSymbol s = SurfaceSymbol::preset(preset);
    const auto serial = run_bialgebra_suite(s, config, Execution::serial);
    const auto parallel = run_bialgebra_suite(s, config, Execution::parallel);
    CHECK(serial.passed());
    REQUIRE(serial.properties.size() == parallel.properties.size());
    for (std::size_t i = 0; i < serial.properties.size(); ++i) {
      CHECK(format_property(serial.properties[i]) == format_property(parallel.properties[i]));
    }
  }
}
