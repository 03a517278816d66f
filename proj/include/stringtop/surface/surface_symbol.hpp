#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stringtop/surface/words.hpp"

namespace stringtop::surface {

/// Cyclic order of the 2n half-edges at the single vertex of a ribbon rose.
/// Thickening the rose gives a surface with free fundamental group of rank n.
class SurfaceSymbol {
 public:
  /// Throws stringtop::Error on duplicate letters or a letter whose inverse
  /// is missing.
  explicit SurfaceSymbol(std::vector<Letter> order);

  /// Accepts `a,b,A,B` or `abAB`.
  static SurfaceSymbol parse(std::string_view text);
  /// `torus-1` (genus 1, one boundary) or `pants` (genus 0, three boundaries).
  static SurfaceSymbol preset(std::string_view name);

  std::size_t rank() const { return order_.size() / 2; }
  std::size_t valence() const { return order_.size(); }
  const std::vector<Letter>& order() const { return order_; }
  bool contains(Letter x) const { return x < position_.size() && position_[x] >= 0; }
  /// Index of `x` in the cyclic order; `x` must be contained.
  int position(Letter x) const { return position_[x]; }

  /// Rank of the outgoing half-edge `next` among the choices at a vertex
  /// entered through half-edge `entered`: the order is read starting just
  /// after `entered`.
  int rank_after(Letter entered, Letter next) const {
    const int n = static_cast<int>(order_.size());
    return ((position_[next] - position_[entered] - 1) % n + n) % n;
  }

  /// Throws stringtop::Error if some letter of `letters` is not a half-edge.
  void require_letters(std::span<const Letter> letters) const;

  std::string to_string() const;

  friend bool operator==(const SurfaceSymbol& a, const SurfaceSymbol& b) { return a.order_ == b.order_; }

 private:
  std::vector<Letter> order_;
  std::vector<int> position_;
};

struct SurfaceTopology {
  int genus;
  int boundary;
};

/// Boundary components are the orbits of h -> successor(inverse(h)); the
/// genus follows from 1 - n = 2 - 2g - b.
SurfaceTopology surface_from_symbol(const SurfaceSymbol& symbol);

}  // namespace stringtop::surface
