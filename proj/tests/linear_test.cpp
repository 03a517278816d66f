#include <doctest.h>

#include <random>

#include "stringtop/error.hpp"
#include "stringtop/linear/formal_sum.hpp"
#include "stringtop/linear/rational.hpp"
#include "stringtop/linear/tensor_map.hpp"

using namespace stringtop;
using namespace stringtop::linear;

namespace {

std::string mpq_text(const mpq_class& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

std::shared_ptr<const GradedBasis> even_basis() { return GradedBasis::make({{"e", 0}, {"x", 0}}); }
std::shared_ptr<const GradedBasis> odd_basis() { return GradedBasis::make({{"u", 1}, {"v", 1}, {"w", 0}}); }

}  // namespace

TEST_CASE("rational parse and canonical form") {
  CHECK(Rational::parse("2/4").to_string() == "1/2");
  CHECK(Rational::parse("-3").to_string() == "-3/1");
  CHECK(Rational::parse("0/7").to_string() == "0/1");
  CHECK_THROWS_AS(Rational::parse("6/-4"), Error);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), Error);
  CHECK_THROWS_AS(Rational::parse("1/"), Error);
  CHECK(Rational(4, -6).to_string() == "-2/3");
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  CHECK(Rational(0).is_zero());
  CHECK(Rational(-5, 3).sign() == -1);
}

TEST_CASE("rational arithmetic matches GMP on random and overflowing operands") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> small(-1000, 1000);
  std::uniform_int_distribution<std::int64_t> huge(std::numeric_limits<std::int64_t>::min() + 1,
                                                   std::numeric_limits<std::int64_t>::max());
  for (int i = 0; i < 2000; ++i) {
    auto& dist = i % 2 ? small : huge;
    const std::int64_t a = dist(rng), b = dist(rng) | 1, c = dist(rng), d = dist(rng) | 1;
    const Rational x(a, b);
    const Rational y(c, d);
    mpq_class qx(mpz_class(std::to_string(a)), mpz_class(std::to_string(b)));
    mpq_class qy(mpz_class(std::to_string(c)), mpz_class(std::to_string(d)));
    qx.canonicalize();
    qy.canonicalize();
    CHECK((x + y).to_string() == mpq_text(qx + qy));
    CHECK((x - y).to_string() == mpq_text(qx - qy));
    CHECK((x * y).to_string() == mpq_text(qx * qy));
    if (c != 0) CHECK((x / y).to_string() == mpq_text(qx / qy));
    CHECK((x < y) == (qx < qy));
    CHECK((x == y) == (qx == qy));
  }
}

TEST_CASE("rational values that leave and re-enter the 64-bit range stay canonical") {
  const Rational big = Rational::parse("92233720368547758070");  // 10 * (2^63 - 1)
  CHECK(big.to_string() == "92233720368547758070/1");
  const Rational back = big / Rational(10);
  CHECK(back == Rational(std::numeric_limits<std::int64_t>::max()));
  CHECK((big - big).is_zero());
  CHECK((big - big) == Rational(0));
  CHECK(Rational(std::numeric_limits<std::int64_t>::min()).to_string() == "-9223372036854775808/1");
}

TEST_CASE("combination drops zero coefficients") {
  Combination<std::string> v{{"a", Rational(1)}, {"b", Rational(2)}};
  v.add("a", Rational(-1));
  CHECK(v.size() == 1);
  CHECK(v.coefficient("a").is_zero());
  CHECK((v - v).empty());
  CHECK((Rational(0) * v).empty());
}

TEST_CASE("formal sums over a graded basis") {
  const auto B = even_basis();
  const auto v = FormalSum::of(B, {{{"e", "x"}, Rational(1)}, {{"x", "e"}, Rational(1)}});
  CHECK(v.arity() == 2);
  CHECK(v.to_string() == "1/1 e (x) x\n1/1 x (x) e\n");
  CHECK(FormalSum(B).to_string() == "(empty)\n");
  CHECK_THROWS_AS(FormalSum::of(B, {{{"q"}, Rational(1)}}), Error);
  CHECK(swap_graded(v) == v);
  CHECK(combine(v, v, Rational(1), Rational(-1)).is_zero());
  CHECK_THROWS_AS(combine(v, FormalSum(odd_basis()), Rational(1), Rational(1)), Error);
  CHECK(tensor(FormalSum::of(B, {{{"e"}, Rational(2)}}), FormalSum::of(B, {{{"x"}, Rational(3)}})) ==
        FormalSum::of(B, {{{"e", "x"}, Rational(6)}}));
}

TEST_CASE("Koszul signs for odd factors") {
  const auto B = odd_basis();
  const auto uv = FormalSum::of(B, {{{"u", "v"}, Rational(1)}});
  CHECK(swap_graded(uv) == FormalSum::of(B, {{{"v", "u"}, Rational(-1)}}));
  const auto uw = FormalSum::of(B, {{{"u", "w"}, Rational(1)}});
  CHECK(swap_graded(uw) == FormalSum::of(B, {{{"w", "u"}, Rational(1)}}));
  // Cyclic rotation of three odd factors is an even permutation of odd
  // elements: sign +1. A transposition of two of them: −1.
  const auto uvu = FormalSum::of(B, {{{"u", "v", "u"}, Rational(1)}});
  const std::size_t rot[] = {1, 2, 0};
  CHECK(permute_graded(uvu, rot) == FormalSum::of(B, {{{"v", "u", "u"}, Rational(1)}}));
  const std::size_t swap01[] = {1, 0, 2};
  CHECK(permute_graded(uvu, swap01) == FormalSum::of(B, {{{"v", "u", "u"}, Rational(-1)}}));
  CHECK(permute_factors(uvu, swap01) == FormalSum::of(B, {{{"v", "u", "u"}, Rational(1)}}));
  CHECK_THROWS_AS(swap_graded(uvu), Error);
}

TEST_CASE("tensor maps apply linearly and check arity") {
  const auto B = even_basis();
  TensorMap m(B, 1, 2);
  m.add({0}, {0, 1}, Rational(1));
  m.add({0}, {1, 0}, Rational(1));
  m.add({1}, {1, 1}, Rational(1));
  const auto e = FormalSum::of(B, {{{"e"}, Rational(1)}});
  CHECK(apply_tensor_map(m, e) == FormalSum::of(B, {{{"e", "x"}, Rational(1)}, {{"x", "e"}, Rational(1)}}));
  const auto ex = FormalSum::of(B, {{{"e", "x"}, Rational(1)}});
  CHECK_THROWS_AS(apply_tensor_map(m, ex), Error);
  CHECK(apply_at(m, ex, 1) == FormalSum::of(B, {{{"e", "x", "x"}, Rational(1)}}));
  CHECK_THROWS_AS(apply_at(m, e, 1), Error);
  CHECK(apply_tensor_map(TensorMap::identity(B, 2), ex) == ex);
  TensorMap bad(B, 1, 1, 1);
  bad.add({0}, {1}, Rational(1));
  CHECK(bad.homogeneity_violation().has_value());
}
