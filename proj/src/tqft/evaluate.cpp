#include "stringtop/tqft/evaluate.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "stringtop/error.hpp"
#include "stringtop/linear/formal_sum.hpp"
#include "stringtop/linear/tensor_map.hpp"

namespace stringtop::tqft {

using dialgebra::Axiom;
using linear::Rational;
using linear::Tensor;
using linear::TensorMap;

std::string_view sector_name(Sector s) { return s == Sector::closed ? "closed" : "open"; }

std::vector<dialgebra::AxiomReport> gate_frobenius(const Dialgebra& d, Sector sector) {
  std::vector<Axiom> axioms = {Axiom::associativity, Axiom::coassociativity};
  if (sector == Sector::closed) {
    axioms.push_back(Axiom::commutativity);
    axioms.push_back(Axiom::cocommutativity);
  }
  axioms.push_back(Axiom::module);
  return dialgebra::check_all(d, axioms);
}

bool gate_passed(const std::vector<dialgebra::AxiomReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.holds; });
}

namespace {

// Applies `map` to the trailing factors, with the Koszul sign of moving a
// map of odd degree past the leading factors.
FormalSum apply_tail(const TensorMap& map, const FormalSum& v, std::size_t width) {
  const std::size_t offset = width - map.in_arity();
  if (map.shift() % 2 == 0) return linear::apply_at(map, v, offset);
  FormalSum signed_v(v.basis_ptr());
  for (const auto& [t, c] : v.terms()) {
    int prefix = 0;
    for (std::size_t k = 0; k < offset; ++k) prefix += v.basis().symbol(t[k]).degree;
    signed_v.add(t, prefix % 2 == 0 ? c : -c);
  }
  return linear::apply_at(map, signed_v, offset);
}

std::size_t position_of(const std::vector<Port>& live, const Port& p) {
  const auto it = std::find(live.begin(), live.end(), p);
  if (it == live.end()) throw Error("internal: wire source not live");
  return static_cast<std::size_t>(it - live.begin());
}

}  // namespace

FormalSum evaluate(const Dialgebra& d, const BordismDag& b, const FormalSum& v) {
  b.validate();
  if (!(*v.basis_ptr() == *d.basis)) throw Error("space mismatch: input is not over the dialgebra's basis");
  if (auto a = v.arity(); a && *a != b.inputs()) {
    throw Error("arity mismatch: bordism has " + std::to_string(b.inputs()) + " inputs but the input is a " +
                std::to_string(*a) + "-tensor");
  }

  FormalSum state = v;
  std::vector<Port> live;
  for (std::size_t k = 0; k < b.inputs(); ++k) live.push_back(BordismDag::input(k));

  for (std::size_t n : b.topological_order()) {
    const GeneratorKind kind = b.nodes()[n].kind;
    const std::size_t k_in = kind_inputs(kind);

    // Bring this node's inputs, in port order, to the end.
    std::vector<std::size_t> chosen;
    for (std::size_t j = 0; j < k_in; ++j) chosen.push_back(position_of(live, *b.source_of(BordismDag::node_in(n, j))));
    std::vector<std::size_t> perm;
    std::vector<Port> next;
    for (std::size_t i = 0; i < live.size(); ++i) {
      if (std::find(chosen.begin(), chosen.end(), i) == chosen.end()) {
        perm.push_back(i);
        next.push_back(live[i]);
      }
    }
    perm.insert(perm.end(), chosen.begin(), chosen.end());
    state = linear::permute_graded(state, perm);

    const std::size_t width = live.size();
    switch (kind) {
      case GeneratorKind::pants: state = apply_tail(d.product, state, width); break;
      case GeneratorKind::copants: state = apply_tail(d.coproduct, state, width); break;
      case GeneratorKind::cylinder: break;
      case GeneratorKind::twist: {
        std::vector<std::size_t> swap(width);
        std::iota(swap.begin(), swap.end(), std::size_t{0});
        std::swap(swap[width - 2], swap[width - 1]);
        state = linear::permute_graded(state, swap);
        break;
      }
    }
    for (std::size_t j = 0; j < kind_outputs(kind); ++j) next.push_back(BordismDag::node_out(n, j));
    live = std::move(next);
  }

  std::vector<std::size_t> perm;
  for (std::size_t k = 0; k < b.outputs(); ++k) perm.push_back(position_of(live, *b.source_of(BordismDag::output(k))));
  return linear::permute_graded(state, perm);
}

BordismDag normal_form(const TopologicalType& t) {
  if (t.inputs == 0 || t.outputs == 0 || t.genus < 0) throw Error("invalid topological type " + type_name(t));
  BordismDag b("normal-" + std::to_string(t.genus) + "-" + std::to_string(t.inputs) + "-" + std::to_string(t.outputs),
               t.inputs, t.outputs);
  if (t.genus == 0 && t.inputs == 1 && t.outputs == 1) {
    const std::size_t c = b.add_node("i1", GeneratorKind::cylinder);
    b.add_wire(BordismDag::input(0), BordismDag::node_in(c, 0));
    b.add_wire(BordismDag::node_out(c, 0), BordismDag::output(0));
    return b;
  }

  std::size_t pants = 0;
  std::size_t copants = 0;
  auto add_pants = [&](Port a, Port c) {
    const std::size_t n = b.add_node("p" + std::to_string(++pants), GeneratorKind::pants);
    b.add_wire(a, BordismDag::node_in(n, 0));
    b.add_wire(c, BordismDag::node_in(n, 1));
    return BordismDag::node_out(n, 0);
  };
  auto add_copants = [&](Port a) {
    const std::size_t n = b.add_node("c" + std::to_string(++copants), GeneratorKind::copants);
    b.add_wire(a, BordismDag::node_in(n, 0));
    return std::array<Port, 2>{BordismDag::node_out(n, 0), BordismDag::node_out(n, 1)};
  };

  Port wire = BordismDag::input(0);
  for (std::size_t k = 1; k < t.inputs; ++k) wire = add_pants(wire, BordismDag::input(k));
  for (int h = 0; h < t.genus; ++h) {
    const auto pair = add_copants(wire);
    wire = add_pants(pair[0], pair[1]);
  }
  std::vector<Port> outs = {wire};
  for (std::size_t k = 1; k < t.outputs; ++k) {
    const auto pair = add_copants(outs.back());
    outs.back() = pair[0];
    outs.push_back(pair[1]);
  }
  for (std::size_t k = 0; k < t.outputs; ++k) b.add_wire(outs[k], BordismDag::output(k));
  return b;
}

CanonicalResult canonical_eval(const Dialgebra& d, const TopologicalType& t, const FormalSum& v, Sector sector) {
  CanonicalResult r{evaluate(d, normal_form(t), v), std::nullopt};
  const auto gate = gate_frobenius(d, sector);
  if (!gate_passed(gate)) {
    std::string failed;
    for (const auto& report : gate) {
      if (!report.holds) failed += (failed.empty() ? "" : ", ") + std::string(dialgebra::axiom_name(report.axiom));
    }
    r.warning = "gate failed (" + failed + "): value depends on the decomposition";
  }
  return r;
}

FormalSum handle(const Dialgebra& d, const FormalSum& v, int genus) {
  FormalSum out = v;
  for (int h = 0; h < genus; ++h) out = linear::apply_tensor_map(d.product, linear::apply_tensor_map(d.coproduct, out));
  return out;
}

}  // namespace stringtop::tqft
