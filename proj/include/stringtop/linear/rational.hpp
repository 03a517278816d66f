#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace stringtop::linear {

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Always kept in lowest terms with a positive denominator; zero is 0/1.
/// Values whose parts fit in 64 bits are stored inline; larger values
/// spill to GMP.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  Rational(const Rational& other);
  Rational(Rational&& other) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&& other) noexcept = default;
  ~Rational() = default;

  /// Parses `p`, `-p` or `p/q`. Throws stringtop::Error on malformed input
  /// or a zero denominator.
  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  int sign() const;

  std::string numerator() const;
  std::string denominator() const;

  /// Always `p/q`, including integers (`3/1`) and zero (`0/1`).
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class to_mpq() const;
  void assign(mpq_class value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;  // set only when the value does not fit inline
};

}  // namespace stringtop::linear
