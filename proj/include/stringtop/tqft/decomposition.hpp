#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stringtop/parallel.hpp"
#include "stringtop/property.hpp"
#include "stringtop/tqft/evaluate.hpp"

namespace stringtop::tqft {

/// A random connected DAG of type `t`, deterministic in `seed`.
///
/// Pants and copants are sewn onto randomly chosen live wires until the
/// counts g + m − 1 and g + n − 1 are used up; pants joining a component to
/// itself add genus, and merges are forced once the remaining pants are
/// needed for connectivity. Twists and cylinders are sprinkled in. The open
/// sector only joins adjacent wires, never closes a handle and never twists,
/// so it requires g = 0. The result is checked with type_of.
BordismDag random_decomposition(const TopologicalType& t, std::uint64_t seed, Sector sector = Sector::closed);

/// Every type with genus ≤ genus_max and 1 ≤ m, n ≤ ports_max.
std::vector<TopologicalType> types_up_to(int genus_max, std::size_t ports_max);

/// Every basis m-tensor, lexicographic.
std::vector<FormalSum> basis_inputs(const Dialgebra& d, std::size_t arity);

struct InvarianceConfig {
  int genus_max = 2;
  std::size_t ports_max = 3;
  std::size_t samples = 20;
  std::uint64_t seed = 20040611;
  Sector sector = Sector::closed;
};

/// A decomposition whose evaluation differs from the normal form's.
struct Discrepancy {
  TopologicalType type;
  std::uint64_t decomposition_seed;
  std::vector<std::string> input;
  FormalSum normal_value;
  FormalSum decomposed_value;
};

struct TypeOutcome {
  TopologicalType type;
  std::size_t decompositions = 0;
  std::size_t mismatches = 0;
  std::optional<Discrepancy> first;
};

struct InvarianceReport {
  std::vector<dialgebra::AxiomReport> gate;
  std::vector<TypeOutcome> types;

  bool gate_passed() const;
  bool invariant() const;
  std::optional<Discrepancy> first_discrepancy() const;
};

/// Compares `samples` random decompositions per type against the normal
/// form on every basis input. Decomposition k of type index i uses
/// case_seed(seed, i * samples + k).
InvarianceReport run_invariance(const Dialgebra& d, const InvarianceConfig& config,
                                Execution mode = Execution::parallel);

/// (id⊗∧)(∨⊗id) = ∨∧ = (∧⊗id)(id⊗∨) on every basis pair.
PropertyResult frobenius_move_property(const Dialgebra& d);

std::string format_discrepancy(const Discrepancy& x);

}  // namespace stringtop::tqft
