#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "stringtop/parallel.hpp"
#include "stringtop/property.hpp"
#include "stringtop/surface/goldman.hpp"

namespace stringtop::surface {

/// Every cyclic word of length 1..max_length over the symbol's generators,
/// in canonical order.
std::vector<CyclicWord> enumerate_cyclic_words(const SurfaceSymbol& symbol, std::size_t max_length);

/// Uniform cyclically reduced word with length drawn from [1, max_length].
CyclicWord random_cyclic_word(const SurfaceSymbol& symbol, std::size_t max_length, std::mt19937_64& rng);

// Defects: each is zero exactly when the identity holds on its inputs.
ClosedStateSum antisymmetry_defect(const SurfaceSymbol& s, const CyclicWord& a, const CyclicWord& b);
ClosedStateSum jacobi_defect(const SurfaceSymbol& s, const CyclicWord& a, const CyclicWord& b,
                             const CyclicWord& c);
ClosedTensor coantisymmetry_defect(const SurfaceSymbol& s, const CyclicWord& a);
ClosedTensor3 cojacobi_defect(const SurfaceSymbol& s, const CyclicWord& a);
ClosedTensor drinfeld_defect(const SurfaceSymbol& s, const CyclicWord& a, const CyclicWord& b);

struct BialgebraSuiteConfig {
  std::size_t exhaustive_max_length = 4;
  std::size_t random_max_length = 8;
  std::size_t samples = 200;
  std::uint64_t seed = 20040611;
};

struct BialgebraSuiteReport {
  std::vector<PropertyResult> properties;

  bool passed() const;
};

/// Antisymmetry, Jacobi, co-antisymmetry, cojacobi and Drinfeld
/// compatibility, exhaustively on short words and on seeded random tuples,
/// plus the cobracket-vanishing and mark/erase identities.
BialgebraSuiteReport run_bialgebra_suite(const SurfaceSymbol& symbol, const BialgebraSuiteConfig& config,
                                         Execution mode = Execution::parallel);

}  // namespace stringtop::surface
