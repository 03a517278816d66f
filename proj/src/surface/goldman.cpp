#include "stringtop/surface/goldman.hpp"

#include <algorithm>
#include <sstream>

namespace stringtop::surface {

namespace {

void require_word(const SurfaceSymbol& symbol, const CyclicWord& w) { symbol.require_letters(w.letters()); }

std::vector<Letter> cyclic_segment(const CyclicWord& w, std::size_t from, std::size_t to) {
  // Letters w_from .. w_{to-1}, read cyclically.
  const std::size_t n = w.size();
  std::vector<Letter> out;
  for (std::size_t k = from; k % n != to % n || out.empty(); ++k) {
    out.push_back(w[k % n]);
    if (out.size() == n) break;
  }
  return out;
}

}  // namespace

int compare_rays(const SurfaceSymbol& symbol, const Ray& r, const Ray& s) {
  // Two purely periodic sequences that agree on period(r) + period(s)
  // letters agree forever.
  const std::size_t bound = r.period() + s.period();
  for (std::size_t k = 0; k < bound; ++k) {
    const Letter x = r.at(k);
    const Letter y = s.at(k);
    if (x == y) continue;
    int kx;
    int ky;
    if (k == 0) {
      kx = symbol.position(x);
      ky = symbol.position(y);
    } else {
      const Letter entered = inverse(r.at(k - 1));
      kx = symbol.rank_after(entered, x);
      ky = symbol.rank_after(entered, y);
    }
    return kx < ky ? -1 : 1;
  }
  return 0;
}

Linking linked(const SurfaceSymbol& symbol, const RayQuad& q) {
  const std::array<const Ray*, 4> rays = {&q.forward1, &q.backward1, &q.forward2, &q.backward2};
  std::array<int, 4> rank{};  // number of rays ordered before ray i
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const int c = compare_rays(symbol, *rays[i], *rays[j]);
      if (c == 0) return Linking::unlinked;
      if (c > 0) {
        ++rank[i];
      } else {
        ++rank[j];
      }
    }
  }
  std::array<int, 4> cyclic{};  // cyclic[rank] = ray index
  for (int i = 0; i < 4; ++i) cyclic[rank[i]] = i;
  // Read the cyclic order starting at forward1 (index 0).
  const int start = rank[0];
  const int second = cyclic[(start + 1) % 4];
  const int third = cyclic[(start + 2) % 4];
  if (third != 1) return Linking::unlinked;
  return second == 2 ? Linking::positive : Linking::negative;
}

Linking crossing(const SurfaceSymbol& symbol, const CyclicWord& a, std::size_t p,
                 const CyclicWord& b, std::size_t q) {
  const Ray f1(a, p, Direction::forward);
  const Ray b1(a, p, Direction::backward);
  const Ray f2(b, q, Direction::forward);
  const Ray b2(b, q, Direction::backward);
  const Letter behind = b1.at(0);
  if (behind == f2.at(0) || behind == b2.at(0)) return Linking::unlinked;
  return linked(symbol, RayQuad{f1, b1, f2, b2});
}

MarkedSum mark_all(const CyclicWord& w) {
  MarkedSum out;
  for (std::size_t p = 0; p < w.size(); ++p) out.add(LinearWord{w.rotation(p)}, Rational(1));
  return out;
}

ClosedStateSum erase_mark(const LinearWord& w) {
  ClosedStateSum out;
  if (auto c = CyclicWord::reduce(w.letters)) out.add(*c, Rational(1));
  return out;
}

ClosedStateSum bracket(const SurfaceSymbol& symbol, const CyclicWord& a, const CyclicWord& b) {
  require_word(symbol, a);
  require_word(symbol, b);
  ClosedStateSum out;
  std::vector<Letter> joined;
  for (std::size_t p = 0; p < a.size(); ++p) {
    for (std::size_t q = 0; q < b.size(); ++q) {
      const Linking s = crossing(symbol, a, p, b, q);
      if (s == Linking::unlinked) continue;
      // Join the loops marked at p and q, then forget the mark.
      joined = a.rotation(p);
      const auto rb = b.rotation(q);
      joined.insert(joined.end(), rb.begin(), rb.end());
      out.add(erase_mark(LinearWord{joined}), Rational(static_cast<int>(s)));
    }
  }
  return out;
}

ClosedStateSum bracket(const SurfaceSymbol& symbol, const ClosedStateSum& a, const ClosedStateSum& b) {
  return linear::extend_bilinearly(
      a, b, [&](const CyclicWord& x, const CyclicWord& y) { return bracket(symbol, x, y); });
}

ClosedTensor cobracket(const SurfaceSymbol& symbol, const CyclicWord& w) {
  require_word(symbol, w);
  ClosedTensor out;
  const std::size_t n = w.size();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q) continue;
      const Linking s = crossing(symbol, w, p, w, q);
      if (s == Linking::unlinked) continue;
      auto first = CyclicWord::reduce(cyclic_segment(w, p, q));
      auto second = CyclicWord::reduce(cyclic_segment(w, q, p));
      if (!first || !second) continue;
      out.add({std::move(*first), std::move(*second)}, Rational(static_cast<int>(s)));
    }
  }
  return out;
}

ClosedTensor cobracket(const SurfaceSymbol& symbol, const ClosedStateSum& v) {
  return linear::extend_linearly(v, [&](const CyclicWord& w) { return cobracket(symbol, w); });
}

ClosedTensor act(const SurfaceSymbol& symbol, const CyclicWord& a, const ClosedTensor& t) {
  ClosedTensor out;
  for (const auto& [xy, c] : t) {
    const auto& [x, y] = xy;
    for (const auto& [z, d] : bracket(symbol, a, x)) out.add({z, y}, c * d);
    for (const auto& [z, d] : bracket(symbol, a, y)) out.add({x, z}, c * d);
  }
  return out;
}

ClosedTensor act(const SurfaceSymbol& symbol, const ClosedStateSum& a, const ClosedTensor& t) {
  return linear::extend_linearly(a, [&](const CyclicWord& w) { return act(symbol, w, t); });
}

std::size_t intersection_count(const SurfaceSymbol& symbol, const CyclicWord& a, const CyclicWord& b) {
  require_word(symbol, a);
  require_word(symbol, b);
  const bool self = a == b;
  std::size_t count = 0;
  for (std::size_t p = 0; p < a.size(); ++p) {
    for (std::size_t q = 0; q < b.size(); ++q) {
      if (self && p == q) continue;
      if (crossing(symbol, a, p, b, q) != Linking::unlinked) ++count;
    }
  }
  // Each self-crossing shows up once from either strand.
  return self ? count / 2 : count;
}

std::string format_sum(const ClosedStateSum& v) {
  if (v.empty()) return "(empty)\n";
  std::ostringstream os;
  for (const auto& [w, c] : v) os << c << ' ' << w.to_string() << '\n';
  return os.str();
}

std::string format_tensor(const ClosedTensor& v) {
  if (v.empty()) return "(empty)\n";
  std::ostringstream os;
  for (const auto& [xy, c] : v) os << c << ' ' << xy.first.to_string() << " (x) " << xy.second.to_string() << '\n';
  return os.str();
}

}  // namespace stringtop::surface
