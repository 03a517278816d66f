#include "stringtop/surface/surface_symbol.hpp"

#include <algorithm>

#include "stringtop/error.hpp"

namespace stringtop::surface {

SurfaceSymbol::SurfaceSymbol(std::vector<Letter> order) : order_(std::move(order)) {
  if (order_.empty()) throw Error("surface symbol is empty");
  Letter max = 0;
  for (Letter x : order_) max = std::max<Letter>(max, x | 1U);
  position_.assign(static_cast<std::size_t>(max) + 1, -1);
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (position_[order_[i]] >= 0) {
      throw Error(std::string("surface symbol: duplicate letter '") + letter_char(order_[i]) + "'");
    }
    position_[order_[i]] = static_cast<int>(i);
  }
  for (Letter x : order_) {
    if (position_[inverse(x)] < 0) {
      throw Error(std::string("surface symbol: missing letter '") + letter_char(inverse(x)) + "'");
    }
  }
}

SurfaceSymbol SurfaceSymbol::parse(std::string_view text) {
  std::vector<Letter> order;
  for (char c : text) {
    if (c == ',' || c == ' ') continue;
    order.push_back(parse_letter(c));
  }
  return SurfaceSymbol(std::move(order));
}

SurfaceSymbol SurfaceSymbol::preset(std::string_view name) {
  if (name == "torus-1") return parse("a,b,A,B");
  if (name == "pants") return parse("a,A,b,B");
  throw Error("unknown surface preset '" + std::string(name) + "'");
}

void SurfaceSymbol::require_letters(std::span<const Letter> letters) const {
  for (Letter x : letters) {
    if (!contains(x)) {
      throw Error(std::string("letter '") + letter_char(x) + "' is not a generator of surface " +
                  to_string());
    }
  }
}

std::string SurfaceSymbol::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (i) out.push_back(',');
    out.push_back(letter_char(order_[i]));
  }
  return out;
}

SurfaceTopology surface_from_symbol(const SurfaceSymbol& symbol) {
  const auto& order = symbol.order();
  const std::size_t n2 = order.size();
  std::vector<bool> seen(n2, false);
  int boundary = 0;
  for (std::size_t start = 0; start < n2; ++start) {
    if (seen[start]) continue;
    ++boundary;
    std::size_t i = start;
    while (!seen[i]) {
      seen[i] = true;
      const auto inv_pos = static_cast<std::size_t>(symbol.position(inverse(order[i])));
      i = (inv_pos + 1) % n2;
    }
  }
  const int rank = static_cast<int>(symbol.rank());
  const int twice_genus = 1 + rank - boundary;
  if (twice_genus < 0 || twice_genus % 2 != 0) throw Error("surface symbol has inconsistent Euler characteristic");
  return {twice_genus / 2, boundary};
}

}  // namespace stringtop::surface
