#include "stringtop/linear/rational.hpp"

#include <cctype>
#include <limits>

#include "stringtop/error.hpp"

namespace stringtop::linear {

namespace {

__extension__ typedef __int128 Wide;
__extension__ typedef unsigned __int128 UWide;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

UWide magnitude(Wide v) { return v < 0 ? static_cast<UWide>(-v) : static_cast<UWide>(v); }

UWide gcd(UWide a, UWide b) {
  while (b != 0) {
    const UWide r = a % b;
    a = b;
    b = r;
  }
  return a;
}

bool fits(Wide v) { return v >= -static_cast<Wide>(kMax) && v <= static_cast<Wide>(kMax); }

mpz_class to_mpz(std::int64_t v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return z;
}

}  // namespace

Rational::Rational(std::int64_t value) {
  if (value == std::numeric_limits<std::int64_t>::min()) {
    assign(mpq_class(to_mpz(value)));
  } else {
    num_ = value;
  }
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error("rational: zero denominator");
  mpq_class q(to_mpz(num), to_mpz(den));
  q.canonicalize();
  assign(std::move(q));
}

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_), big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(to_mpz(num_), to_mpz(den_));
}

void Rational::assign(mpq_class value) {
  if (mpz_fits_slong_p(value.get_num_mpz_t()) && mpz_fits_slong_p(value.get_den_mpz_t()) &&
      sizeof(long) == sizeof(std::int64_t) && value.get_num() != std::numeric_limits<long>::min()) {
    num_ = value.get_num().get_si();
    den_ = value.get_den().get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(value));
  }
}

namespace {

/// Stores n/d (d > 0) in lowest terms, spilling to GMP if needed.
template <class Assign>
void store(Wide n, Wide d, std::int64_t& num, std::int64_t& den, std::unique_ptr<mpq_class>& big, Assign&& spill) {
  const UWide g = gcd(magnitude(n), static_cast<UWide>(d));
  if (g > 1) {
    n /= static_cast<Wide>(g);
    d /= static_cast<Wide>(g);
  }
  if (fits(n) && fits(d)) {
    num = static_cast<std::int64_t>(n);
    den = static_cast<std::int64_t>(d);
    big.reset();
  } else {
    spill();
  }
}

}  // namespace

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

std::string Rational::numerator() const { return big_ ? big_->get_num().get_str() : std::to_string(num_); }

std::string Rational::denominator() const { return big_ ? big_->get_den().get_str() : std::to_string(den_); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-') {
    throw Error("malformed rational '" + std::string(text) + "'");
  }
  mpz_class d = parse_integer(den);
  if (d == 0) throw Error("rational: zero denominator in '" + std::string(text) + "'");
  mpq_class q(parse_integer(num), d);
  q.canonicalize();
  Rational r;
  r.assign(std::move(q));
  return r;
}

std::string Rational::to_string() const { return numerator() + "/" + denominator(); }

Rational Rational::operator-() const {
  Rational r(*this);
  if (r.big_) {
    *r.big_ = -*r.big_;
  } else {
    r.num_ = -r.num_;
  }
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    const Wide n = static_cast<Wide>(num_) * rhs.den_ + static_cast<Wide>(rhs.num_) * den_;
    const Wide d = static_cast<Wide>(den_) * rhs.den_;
    store(n, d, num_, den_, big_, [&] { assign(to_mpq() + rhs.to_mpq()); });
  } else {
    assign(to_mpq() + rhs.to_mpq());
  }
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    const Wide n = static_cast<Wide>(num_) * rhs.num_;
    const Wide d = static_cast<Wide>(den_) * rhs.den_;
    store(n, d, num_, den_, big_, [&] { assign(to_mpq() * rhs.to_mpq()); });
  } else {
    assign(to_mpq() * rhs.to_mpq());
  }
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error("rational: division by zero");
  if (!big_ && !rhs.big_) {
    Wide n = static_cast<Wide>(num_) * rhs.den_;
    Wide d = static_cast<Wide>(den_) * rhs.num_;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    store(n, d, num_, den_, big_, [&] { assign(to_mpq() / rhs.to_mpq()); });
  } else {
    assign(to_mpq() / rhs.to_mpq());
  }
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  // Both sides are canonical, so an inline value never equals a spilled one.
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = 0;
  if (!a.big_ && !b.big_) {
    const Wide l = static_cast<Wide>(a.num_) * b.den_;
    const Wide r = static_cast<Wide>(b.num_) * a.den_;
    c = (l > r) - (l < r);
  } else {
    c = cmp(a.to_mpq(), b.to_mpq());
  }
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace stringtop::linear
