#include <doctest.h>

#include <sstream>

#include "stringtop/cli.hpp"
#include "support.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  for (auto& a : args) {
    if (a.starts_with("data:")) a = test_support::data_path(a.substr(5));
  }
  std::ostringstream out;
  std::ostringstream err;
  const int code = stringtop::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("bracket and cobracket") {
  auto r = run({"bracket", "--surface", "torus-1", "a", "b"});
  CHECK(r.code == 0);
  CHECK(r.out == "1/1 ab\n");
  CHECK(run({"bracket", "--surface", "torus-1", "b", "a"}).out == "-1/1 ab\n");
  CHECK(run({"bracket", "--symbol", "aAbB", "a", "b"}).out == "(empty)\n");
  r = run({"cobracket", "--surface", "torus-1", "ab"});
  CHECK(r.code == 0);
  CHECK(r.out == "(empty)\n");
}

TEST_CASE("dialgebra-check reports the derivation witness") {
  const auto r = run({"dialgebra-check", "data:dual-numbers.dlg", "--axioms", "all"});
  CHECK(r.code == 1);
  CHECK(r.out.find("module-compatibility PASS\n") != std::string::npos);
  CHECK(r.out.find("derivation-compatibility FAIL witness (e,e)\n"
                   "  cop(a.b) = 1/1 e (x) x + 1/1 x (x) e\n"
                   "  cop(a).b+a.cop(b) = 2/1 e (x) x + 2/1 x (x) e\n") != std::string::npos);

  const auto ok = run({"dialgebra-check", "data:dual-numbers.dlg", "--axioms", "module-compatibility,unit"});
  CHECK(ok.code == 0);
  CHECK(ok.out == "module-compatibility PASS\nunit PASS\n");

  const auto mutated = run({"dialgebra-check", "data:dual-numbers-mutated.dlg", "--axioms", "module"});
  CHECK(mutated.code == 1);
  CHECK(mutated.out.starts_with("module-compatibility FAIL witness (e,x)\n"));
}

TEST_CASE("classify prints the cell table") {
  const auto r = run({"classify", "data:dual-numbers.dlg"});
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("associative/module yes\n"
                          "associative/derivation no\n"
                          "commutative/module yes\n"
                          "commutative/derivation no\n"
                          "lie/module no\n"
                          "lie/derivation no\n"
                          "hopf no\n"));
}

TEST_CASE("tqft-eval") {
  CHECK(run({"tqft-eval", "data:dual-numbers.dlg", "data:pants.bdg", "--input", "e,x"}).out == "1/1 x\n");
  CHECK(run({"tqft-eval", "data:dual-numbers.dlg", "--type", "1,1,1", "--input", "e"}).out == "2/1 x\n");
  CHECK(run({"tqft-eval", "data:dual-numbers.dlg", "data:zigzag.bdg", "--input", "e,e"}).out ==
        "1/1 e (x) x\n1/1 x (x) e\n");
  const auto warned = run({"tqft-eval", "data:dual-numbers-mutated.dlg", "--type", "1,1,1", "--input", "e"});
  CHECK(warned.code == 0);
  CHECK(warned.err.find("gate failed") != std::string::npos);
  CHECK(run({"tqft-eval", "data:dual-numbers.dlg", "data:pants.bdg", "--input", "e"}).code == 2);
  CHECK(run({"tqft-eval", "data:dual-numbers.dlg", "data:pants.bdg", "--input", "e,q"}).code == 2);
}

TEST_CASE("tqft-invariance") {
  const auto ok = run({"tqft-invariance", "data:dual-numbers.dlg", "--genus-max", "1", "--ports-max", "2", "--samples", "3"});
  CHECK(ok.code == 0);
  CHECK(ok.out.ends_with("g=1 m=2 n=2 decompositions=3 mismatches=0\ninvariant\n"));
  const auto bad = run({"tqft-invariance", "data:dual-numbers-mutated.dlg", "--genus-max", "0", "--ports-max", "3"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("discrepancy g=") != std::string::npos);
  CHECK(bad.out.ends_with("not invariant\n"));
  // Serial and parallel runs print the same report.
  CHECK(run({"tqft-invariance", "data:dual-numbers-mutated.dlg", "--genus-max", "0", "--ports-max", "3", "--serial"}).out ==
        bad.out);
}

TEST_CASE("graph operations") {
  CHECK(run({"graph", "data:square.graph", "compose", "a", "b"}).out == "1/1 a.b\n");
  CHECK(run({"graph", "data:square.graph", "compose", "a", "d"}).out == "(empty)\n");
  CHECK(run({"graph", "data:square.graph", "cut", "a.b", "--label", "B"}).out == "1/1 a (x) b\n");
  CHECK(run({"graph", "data:square.graph", "cut", "a.b", "--label", "C"}).out == "(empty)\n");
  CHECK(run({"graph", "data:square.graph", "restrict", "a+d", "--start", "A"}).out == "1/1 a\n1/1 d\n");
  CHECK(run({"graph", "data:square.graph", "compose", "a", "z"}).code == 2);
}

TEST_CASE("bialgebra-suite") {
  const auto r = run({"bialgebra-suite", "--max-len", "2", "--random-max-len", "4", "--samples", "10"});
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("PASS antisymmetry (exhaustive) cases=144 failures=0\n"));
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("input errors exit with code 2") {
  const auto missing = run({"dialgebra-check", "nope.dlg", "--axioms", "all"});
  CHECK(missing.code == 2);
  CHECK(missing.err.starts_with("error: "));
  CHECK(run({"dialgebra-check", "data:dual-numbers.dlg", "--axioms", "bogus"}).code == 2);
  CHECK(run({"bracket", "--surface", "torus-1", "a"}).code == 2);
  CHECK(run({"bracket", "--surface", "klein", "a", "b"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("parse errors carry the line number") {
  const auto r = run({"tqft-eval", "data:dual-numbers.dlg", "data:dual-numbers.dlg", "--input", "e"});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2: expected 'bordism <name>'") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"classify", "data:matrix2.dlg"};
  CHECK(run(args).out == run(args).out);
}
