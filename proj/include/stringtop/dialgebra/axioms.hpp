#pragma once

#include <compare>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stringtop/dialgebra/dialgebra.hpp"
#include "stringtop/parallel.hpp"

namespace stringtop::dialgebra {

enum class Axiom {
  associativity,
  coassociativity,
  commutativity,
  cocommutativity,
  skew_symmetry,
  coskew_symmetry,
  jacobi,
  cojacobi,
  unit,
  derivation,
  module,
  lie_module,
  drinfeld,
  hopf,
};

std::string_view axiom_name(Axiom axiom);
/// Throws stringtop::Error("unknown axiom ...") for unrecognized names.
Axiom parse_axiom(std::string_view name);
std::span<const Axiom> all_axioms();

struct Side {
  std::string label;
  FormalSum value;
};

/// A basis tuple on which the sides of an axiom disagree.
struct Witness {
  std::vector<std::string> inputs;
  std::vector<Side> sides;
};

struct AxiomReport {
  Axiom axiom;
  bool holds = true;
  std::optional<Witness> witness;
};

struct CheckOptions {
  /// Use ∨(a·b) = (∨a)·b + (−1)^{|a||∨|} a·(∨b) for the derivation rule.
  bool koszul_derivation = false;
};

/// Exhaustive check over every basis tuple. The report's witness is the first
/// failing tuple in lexicographic basis order.
AxiomReport check(const Dialgebra& d, Axiom axiom, const CheckOptions& options = {});
AxiomReport check(const Dialgebra& d, std::string_view axiom, const CheckOptions& options = {});

/// Evaluates every side of `axiom` on the given basis tuple.
std::vector<Side> evaluate_sides(const Dialgebra& d, Axiom axiom,
                                 std::span<const std::string> inputs,
                                 const CheckOptions& options = {});

std::vector<AxiomReport> check_all(const Dialgebra& d, std::span<const Axiom> axioms,
                                   Execution mode = Execution::serial,
                                   const CheckOptions& options = {});

enum class Structure { associative, commutative, lie };
enum class Compatibility { module, derivation };

struct Cell {
  Structure structure;
  Compatibility compatibility;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string cell_name(Cell cell);
std::vector<Axiom> cell_axioms(Cell cell);
std::span<const Cell> all_cells();

struct Classification {
  std::set<Cell> cells;
  bool hopf = false;
  std::vector<AxiomReport> reports;  // one per axiom consulted
};

Classification classify(const Dialgebra& d, Execution mode = Execution::serial);

}  // namespace stringtop::dialgebra
