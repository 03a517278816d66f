#include "stringtop/dialgebra/axioms.hpp"

#include <array>
#include <utility>

#include "stringtop/error.hpp"

namespace stringtop::dialgebra {

namespace {

constexpr std::array kAllAxioms = {
    Axiom::associativity, Axiom::coassociativity, Axiom::commutativity, Axiom::cocommutativity,
    Axiom::skew_symmetry, Axiom::coskew_symmetry, Axiom::jacobi,          Axiom::cojacobi,
    Axiom::unit,          Axiom::derivation,      Axiom::module,          Axiom::lie_module,
    Axiom::drinfeld,      Axiom::hopf,
};

constexpr std::array kAllCells = {
    Cell{Structure::associative, Compatibility::module},
    Cell{Structure::associative, Compatibility::derivation},
    Cell{Structure::commutative, Compatibility::module},
    Cell{Structure::commutative, Compatibility::derivation},
    Cell{Structure::lie, Compatibility::module},
    Cell{Structure::lie, Compatibility::derivation},
};

std::size_t input_arity(Axiom axiom) {
  switch (axiom) {
    case Axiom::associativity:
    case Axiom::jacobi:
      return 3;
    case Axiom::commutativity:
    case Axiom::skew_symmetry:
    case Axiom::derivation:
    case Axiom::module:
    case Axiom::lie_module:
    case Axiom::drinfeld:
    case Axiom::hopf:
      return 2;
    default:
      return 1;
  }
}

FormalSum coproduct_then_left(const Dialgebra& d, const FormalSum& a) {
  return linear::apply_at(d.coproduct, comultiply(d, a), 0);
}

FormalSum coproduct_then_right(const Dialgebra& d, const FormalSum& a) {
  return linear::apply_at(d.coproduct, comultiply(d, a), 1);
}

FormalSum bracket_swapped(const Dialgebra& d, const FormalSum& a, const FormalSum& b) {
  return linear::apply_tensor_map(d.product, linear::swap_graded(linear::tensor(a, b)));
}

std::vector<Side> sides_for(const Dialgebra& d, Axiom axiom, const std::vector<FormalSum>& in,
                            const CheckOptions& options) {
  const FormalSum zero = d.zero();
  switch (axiom) {
    case Axiom::associativity:
      return {{"(a.b).c", multiply(d, multiply(d, in[0], in[1]), in[2])},
              {"a.(b.c)", multiply(d, in[0], multiply(d, in[1], in[2]))}};
    case Axiom::coassociativity:
      return {{"(cop(x)id)cop(a)", coproduct_then_left(d, in[0])},
              {"(id(x)cop)cop(a)", coproduct_then_right(d, in[0])}};
    case Axiom::commutativity:
      return {{"a.b", multiply(d, in[0], in[1])}, {"prod(swap(a(x)b))", bracket_swapped(d, in[0], in[1])}};
    case Axiom::cocommutativity: {
      FormalSum cop = comultiply(d, in[0]);
      FormalSum swapped = linear::swap_graded(cop);
      return {{"cop(a)", std::move(cop)}, {"swap(cop(a))", std::move(swapped)}};
    }
    case Axiom::skew_symmetry:
      return {{"[a,b]", multiply(d, in[0], in[1])},
              {"-prod(swap(a(x)b))", linear::combine(zero, bracket_swapped(d, in[0], in[1]), 1, -1)}};
    case Axiom::coskew_symmetry: {
      FormalSum cop = comultiply(d, in[0]);
      FormalSum swapped = linear::combine(zero, linear::swap_graded(cop), 1, -1);
      return {{"cop(a)", std::move(cop)}, {"-swap(cop(a))", std::move(swapped)}};
    }
    case Axiom::jacobi: {
      const auto& [a, b, c] = std::tie(in[0], in[1], in[2]);
      FormalSum sum = multiply(d, a, multiply(d, b, c));
      sum.add(multiply(d, b, multiply(d, c, a)));
      sum.add(multiply(d, c, multiply(d, a, b)));
      return {{"[a,[b,c]]+[b,[c,a]]+[c,[a,b]]", std::move(sum)}, {"0", zero}};
    }
    case Axiom::cojacobi: {
      static constexpr std::size_t kRot[] = {1, 2, 0};
      static constexpr std::size_t kRot2[] = {2, 0, 1};
      const FormalSum twice = coproduct_then_left(d, in[0]);
      FormalSum sum = twice;
      sum.add(linear::permute_graded(twice, kRot));
      sum.add(linear::permute_graded(twice, kRot2));
      return {{"(1+rot+rot^2)(cop(x)id)cop(a)", std::move(sum)}, {"0", zero}};
    }
    case Axiom::unit: {
      if (!d.unit) return {};
      const FormalSum e = FormalSum::basis_element(d.basis, {*d.unit});
      return {{"e.a", multiply(d, e, in[0])}, {"a", in[0]}, {"a.e", multiply(d, in[0], e)}};
    }
    case Axiom::derivation: {
      const auto& [a, b] = std::tie(in[0], in[1]);
      FormalSum rhs = act_right(d, comultiply(d, a), b);
      int sign = 1;
      if (options.koszul_derivation) {
        const int deg_a = d.basis->symbol(a.terms().begin()->first[0]).degree;
        if ((deg_a * d.coproduct.shift()) % 2 != 0) sign = -1;
      }
      rhs.add(act_left(d, a, comultiply(d, b)), Rational(sign));
      return {{"cop(a.b)", comultiply(d, multiply(d, a, b))}, {"cop(a).b+a.cop(b)", std::move(rhs)}};
    }
    case Axiom::module: {
      const auto& [a, b] = std::tie(in[0], in[1]);
      return {{"cop(a.b)", comultiply(d, multiply(d, a, b))},
              {"cop(a).b", act_right(d, comultiply(d, a), b)},
              {"a.cop(b)", act_left(d, a, comultiply(d, b))}};
    }
    case Axiom::lie_module: {
      const auto& [a, b] = std::tie(in[0], in[1]);
      return {{"cop([a,b])", comultiply(d, multiply(d, a, b))},
              {"cop(a).b", linear::combine(zero, act_lie(d, b, comultiply(d, a)), 1, -1)},
              {"a.cop(b)", act_lie(d, a, comultiply(d, b))}};
    }
    case Axiom::drinfeld: {
      const auto& [a, b] = std::tie(in[0], in[1]);
      return {{"cop([a,b])", comultiply(d, multiply(d, a, b))},
              {"a.cop(b)-b.cop(a)",
               linear::combine(act_lie(d, a, comultiply(d, b)), act_lie(d, b, comultiply(d, a)), 1, -1)}};
    }
    case Axiom::hopf: {
      static constexpr std::size_t kInterleave[] = {0, 2, 1, 3};
      const auto& [a, b] = std::tie(in[0], in[1]);
      FormalSum four =
          linear::permute_factors(linear::tensor(comultiply(d, a), comultiply(d, b)), kInterleave);
      FormalSum prod = linear::apply_at(d.product, linear::apply_at(d.product, four, 0), 1);
      return {{"cop(a.b)", comultiply(d, multiply(d, a, b))}, {"cop(a).cop(b)", std::move(prod)}};
    }
  }
  throw Error("unhandled axiom");
}

bool all_equal(const std::vector<Side>& sides) {
  for (std::size_t k = 1; k < sides.size(); ++k) {
    if (!(sides[k].value == sides[0].value)) return false;
  }
  return true;
}

}  // namespace

std::string_view axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::associativity: return "associativity";
    case Axiom::coassociativity: return "coassociativity";
    case Axiom::commutativity: return "commutativity";
    case Axiom::cocommutativity: return "cocommutativity";
    case Axiom::skew_symmetry: return "skew-symmetry";
    case Axiom::coskew_symmetry: return "coskew-symmetry";
    case Axiom::jacobi: return "jacobi";
    case Axiom::cojacobi: return "cojacobi";
    case Axiom::unit: return "unit";
    case Axiom::derivation: return "derivation-compatibility";
    case Axiom::module: return "module-compatibility";
    case Axiom::lie_module: return "lie-module-compatibility";
    case Axiom::drinfeld: return "drinfeld";
    case Axiom::hopf: return "hopf";
  }
  return "?";
}

Axiom parse_axiom(std::string_view name) {
  for (Axiom a : kAllAxioms) {
    if (axiom_name(a) == name) return a;
  }
  // Short aliases.
  if (name == "derivation") return Axiom::derivation;
  if (name == "module") return Axiom::module;
  if (name == "frobenius") return Axiom::module;
  if (name == "lie-module") return Axiom::lie_module;
  throw Error("unknown axiom '" + std::string(name) + "'");
}

std::span<const Axiom> all_axioms() { return kAllAxioms; }

std::vector<Side> evaluate_sides(const Dialgebra& d, Axiom axiom,
                                 std::span<const std::string> inputs,
                                 const CheckOptions& options) {
  if (inputs.size() != input_arity(axiom)) {
    throw Error(std::string(axiom_name(axiom)) + " takes " + std::to_string(input_arity(axiom)) +
                " inputs");
  }
  std::vector<FormalSum> in;
  for (const auto& name : inputs) in.push_back(d.element(name));
  return sides_for(d, axiom, in, options);
}

AxiomReport check(const Dialgebra& d, Axiom axiom, const CheckOptions& options) {
  AxiomReport report{axiom, true, std::nullopt};
  const std::size_t k = input_arity(axiom);
  const auto dim = static_cast<std::uint32_t>(d.basis->dimension());
  if (dim == 0 || (axiom == Axiom::unit && !d.unit)) return report;

  Tensor idx(k, 0);
  while (true) {
    std::vector<FormalSum> in;
    in.reserve(k);
    for (auto i : idx) in.push_back(FormalSum::basis_element(d.basis, {i}));
    auto sides = sides_for(d, axiom, in, options);
    if (!all_equal(sides)) {
      Witness w;
      for (auto i : idx) w.inputs.push_back(d.basis->symbol(i).name);
      w.sides = std::move(sides);
      report.holds = false;
      report.witness = std::move(w);
      return report;
    }
    std::size_t pos = k;
    while (pos > 0 && ++idx[pos - 1] == dim) idx[--pos] = 0;
    if (pos == 0) break;
  }
  return report;
}

AxiomReport check(const Dialgebra& d, std::string_view axiom, const CheckOptions& options) {
  return check(d, parse_axiom(axiom), options);
}

std::vector<AxiomReport> check_all(const Dialgebra& d, std::span<const Axiom> axioms,
                                   Execution mode, const CheckOptions& options) {
  std::vector<AxiomReport> out(axioms.size());
  for_each_case(mode, axioms.size(), [&](std::size_t i) { out[i] = check(d, axioms[i], options); });
  return out;
}

std::string cell_name(Cell cell) {
  std::string s;
  switch (cell.structure) {
    case Structure::associative: s = "associative"; break;
    case Structure::commutative: s = "commutative"; break;
    case Structure::lie: s = "lie"; break;
  }
  s += cell.compatibility == Compatibility::module ? "/module" : "/derivation";
  return s;
}

std::vector<Axiom> cell_axioms(Cell cell) {
  std::vector<Axiom> out;
  switch (cell.structure) {
    case Structure::associative:
      out = {Axiom::associativity, Axiom::coassociativity};
      break;
    case Structure::commutative:
      out = {Axiom::associativity, Axiom::coassociativity, Axiom::commutativity,
             Axiom::cocommutativity};
      break;
    case Structure::lie:
      out = {Axiom::skew_symmetry, Axiom::coskew_symmetry, Axiom::jacobi, Axiom::cojacobi};
      break;
  }
  if (cell.structure == Structure::lie) {
    out.push_back(cell.compatibility == Compatibility::module ? Axiom::lie_module : Axiom::drinfeld);
  } else {
    out.push_back(cell.compatibility == Compatibility::module ? Axiom::module : Axiom::derivation);
  }
  return out;
}

std::span<const Cell> all_cells() { return kAllCells; }

Classification classify(const Dialgebra& d, Execution mode) {
  static constexpr std::array kConsulted = {
      Axiom::associativity, Axiom::coassociativity, Axiom::commutativity, Axiom::cocommutativity,
      Axiom::skew_symmetry, Axiom::coskew_symmetry, Axiom::jacobi,        Axiom::cojacobi,
      Axiom::derivation,    Axiom::module,          Axiom::lie_module,    Axiom::drinfeld,
      Axiom::hopf,
  };
  Classification out;
  out.reports = check_all(d, kConsulted, mode);
  auto holds = [&](Axiom a) {
    for (const auto& r : out.reports) {
      if (r.axiom == a) return r.holds;
    }
    return false;
  };
  for (Cell cell : kAllCells) {
    bool ok = true;
    for (Axiom a : cell_axioms(cell)) ok = ok && holds(a);
    if (ok) out.cells.insert(cell);
  }
  out.hopf = holds(Axiom::hopf);
  return out;
}

}  // namespace stringtop::dialgebra
