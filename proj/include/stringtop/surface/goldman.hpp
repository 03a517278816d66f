#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>

#include "stringtop/linear/combination.hpp"
#include "stringtop/surface/surface_symbol.hpp"
#include "stringtop/surface/words.hpp"

namespace stringtop::surface {

using linear::Combination;
using linear::Rational;

/// Span of nontrivial free homotopy classes (the trivial class is dropped).
using ClosedStateSum = Combination<CyclicWord>;
using ClosedTensor = Combination<std::pair<CyclicWord, CyclicWord>>;
using ClosedTensor3 = Combination<std::array<CyclicWord, 3>>;
using MarkedSum = Combination<LinearWord>;

enum class Direction { forward, backward };

/// Infinite reduced ray read off a cyclic word from the vertex before letter
/// `start`. Forward: w_p w_{p+1} ...; backward: w_{p-1}^{-1} w_{p-2}^{-1} ...
/// Views the word's storage; the word must outlive the ray.
class Ray {
 public:
  Ray(const CyclicWord& word, std::size_t start, Direction dir)
      : word_(&word.letters()), start_(start % word.size()), dir_(dir) {}

  Letter at(std::size_t k) const {
    const std::size_t n = word_->size();
    if (dir_ == Direction::forward) return (*word_)[(start_ + k) % n];
    return inverse((*word_)[(start_ + n - 1 - (k % n)) % n]);
  }
  std::size_t period() const { return word_->size(); }

 private:
  const std::vector<Letter>* word_;
  std::size_t start_;
  Direction dir_;
};

inline Ray strand(const CyclicWord& w, std::size_t p, Direction dir) { return Ray(w, p, dir); }

/// Compares two rays in the planar order of ends seen from the base vertex:
/// -1 / +1 for before / after, 0 when the rays are identical.
int compare_rays(const SurfaceSymbol& symbol, const Ray& r, const Ray& s);

enum class Linking : int { negative = -1, unlinked = 0, positive = 1 };

struct RayQuad {
  Ray forward1;
  Ray backward1;
  Ray forward2;
  Ray backward2;
};

/// Cyclic order of four rays at the vertex. Positive for (f1, f2, b1, b2),
/// negative for (f1, b2, b1, f2), unlinked when the first pair is not
/// separated by the second or two rays coincide.
Linking linked(const SurfaceSymbol& symbol, const RayQuad& rays);

/// Crossing test for the strands through position p of `a` and position q
/// of `b`. Two strands that run together along a common segment meet the
/// vertex once per letter of that segment; only the vertex where the segment
/// begins (along the first strand) reports the crossing, so each crossing is
/// counted exactly once.
Linking crossing(const SurfaceSymbol& symbol, const CyclicWord& a, std::size_t p,
                 const CyclicWord& b, std::size_t q);

/// Sum over the |w| markings of w (periodic words repeat images).
MarkedSum mark_all(const CyclicWord& w);
/// The reduced cyclic class of a marked word; zero for the trivial class.
ClosedStateSum erase_mark(const LinearWord& w);

/// Goldman bracket on basis words: sum over crossing position pairs of
/// sign · [rotate(a, p) rotate(b, q)], trivial classes dropped.
ClosedStateSum bracket(const SurfaceSymbol& symbol, const CyclicWord& a, const CyclicWord& b);
ClosedStateSum bracket(const SurfaceSymbol& symbol, const ClosedStateSum& a, const ClosedStateSum& b);

/// Cobracket on a basis word: sum over ordered pairs of distinct crossing
/// positions (p, q) of sign · [w_p..w_{q-1}] ⊗ [w_q..w_{p-1}], dropping terms
/// with a trivial factor.
ClosedTensor cobracket(const SurfaceSymbol& symbol, const CyclicWord& w);
ClosedTensor cobracket(const SurfaceSymbol& symbol, const ClosedStateSum& v);

/// Lie module action a·(x⊗y) = [a,x]⊗y + x⊗[a,y].
ClosedTensor act(const SurfaceSymbol& symbol, const CyclicWord& a, const ClosedTensor& t);
ClosedTensor act(const SurfaceSymbol& symbol, const ClosedStateSum& a, const ClosedTensor& t);

/// Number of crossings between a and b. For a == b, the number of
/// self-crossings of a.
std::size_t intersection_count(const SurfaceSymbol& symbol, const CyclicWord& a, const CyclicWord& b);

/// `p/q word` lines in canonical order, or `(empty)`.
std::string format_sum(const ClosedStateSum& v);
/// `p/q w1 (x) w2` lines, or `(empty)`.
std::string format_tensor(const ClosedTensor& v);

}  // namespace stringtop::surface
