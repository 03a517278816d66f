#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stringtop/dialgebra/axioms.hpp"
#include "stringtop/dialgebra/dialgebra.hpp"
#include "stringtop/tqft/bordism.hpp"

namespace stringtop::tqft {

using dialgebra::Dialgebra;
using linear::FormalSum;

/// Closed sector: commutative Frobenius data, twists allowed. Open sector:
/// associative Frobenius data on a single boundary label, planar wiring only.
enum class Sector { closed, open };

std::string_view sector_name(Sector s);

/// The compatibility checks under which evaluation does not depend on the
/// decomposition: associativity, coassociativity and module compatibility,
/// plus commutativity and cocommutativity in the closed sector.
std::vector<dialgebra::AxiomReport> gate_frobenius(const Dialgebra& d, Sector sector = Sector::closed);
bool gate_passed(const std::vector<dialgebra::AxiomReport>& reports);

/// Pants act as the product, copants as the coproduct, cylinders as the
/// identity and twists as the graded swap. `v` must be an m-tensor (or zero).
/// Throws stringtop::Error on a malformed DAG or an arity mismatch.
FormalSum evaluate(const Dialgebra& d, const BordismDag& b, const FormalSum& v);

/// Fold the inputs with the product, apply g handles (coproduct then
/// product), then unfold by repeatedly comultiplying the last wire. The
/// (0, 1, 1) type is a single cylinder.
BordismDag normal_form(const TopologicalType& t);

struct CanonicalResult {
  FormalSum value;
  /// Set when the gate fails: the value then depends on the decomposition.
  std::optional<std::string> warning;
};

CanonicalResult canonical_eval(const Dialgebra& d, const TopologicalType& t, const FormalSum& v,
                               Sector sector = Sector::closed);

/// Repeated handle operator ∧∘∨ applied `genus` times to a 1-tensor.
FormalSum handle(const Dialgebra& d, const FormalSum& v, int genus = 1);

}  // namespace stringtop::tqft
