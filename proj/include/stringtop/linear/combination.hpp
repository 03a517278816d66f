#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <utility>

#include "stringtop/linear/rational.hpp"

namespace stringtop::linear {

/// Finite linear combination of keys with rational coefficients.
///
/// Terms live in an ordered map, so two combinations are equal exactly when
/// their term lists are equal. No stored coefficient is ever zero.
template <class Key, class Compare = std::less<Key>>
class Combination {
 public:
  using key_type = Key;
  using container = std::map<Key, Rational, Compare>;
  using const_iterator = typename container::const_iterator;

  Combination() = default;
  Combination(std::initializer_list<std::pair<Key, Rational>> terms) {
    for (const auto& [k, c] : terms) add(k, c);
  }

  static Combination single(Key key, Rational coeff = Rational(1)) {
    Combination out;
    out.add(std::move(key), std::move(coeff));
    return out;
  }

  void add(const Key& key, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add(const Combination& other, const Rational& scale = Rational(1)) {
    if (scale.is_zero()) return;
    for (const auto& [k, c] : other.terms_) add(k, c * scale);
  }

  Rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const container& terms() const { return terms_; }

  Combination operator-() const {
    Combination out;
    for (const auto& [k, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), k, -c);
    return out;
  }
  Combination& operator+=(const Combination& rhs) {
    add(rhs);
    return *this;
  }
  Combination& operator-=(const Combination& rhs) {
    add(rhs, Rational(-1));
    return *this;
  }
  Combination& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator*(const Rational& s, Combination a) { return a *= s; }
  friend bool operator==(const Combination& a, const Combination& b) { return a.terms_ == b.terms_; }

 private:
  container terms_;
};

/// c·v + d·w.
template <class Key, class Compare>
Combination<Key, Compare> combine(const Combination<Key, Compare>& v,
                                  const Combination<Key, Compare>& w, const Rational& c,
                                  const Rational& d) {
  Combination<Key, Compare> out;
  out.add(v, c);
  out.add(w, d);
  return out;
}

/// Linear extension of `f`, which maps a single key to a combination.
template <class Key, class Compare, class F>
auto extend_linearly(const Combination<Key, Compare>& v, F&& f) {
  using Result = decltype(f(std::declval<const Key&>()));
  Result out;
  for (const auto& [k, c] : v) out.add(f(k), c);
  return out;
}

/// Bilinear extension of `f` over two combinations.
template <class K1, class C1, class K2, class C2, class F>
auto extend_bilinearly(const Combination<K1, C1>& v, const Combination<K2, C2>& w, F&& f) {
  using Result = decltype(f(std::declval<const K1&>(), std::declval<const K2&>()));
  Result out;
  for (const auto& [k1, c1] : v) {
    for (const auto& [k2, c2] : w) out.add(f(k1, k2), c1 * c2);
  }
  return out;
}

/// Bilinear extension of (k1, k2) -> pair(k1, k2).
template <class K1, class C1, class K2, class C2>
Combination<std::pair<K1, K2>> tensor_pairs(const Combination<K1, C1>& v,
                                            const Combination<K2, C2>& w) {
  Combination<std::pair<K1, K2>> out;
  for (const auto& [k1, c1] : v) {
    for (const auto& [k2, c2] : w) out.add({k1, k2}, c1 * c2);
  }
  return out;
}

}  // namespace stringtop::linear
