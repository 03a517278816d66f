#include "stringtop/linear/formal_sum.hpp"

#include <set>
#include <sstream>

#include "stringtop/error.hpp"

namespace stringtop::linear {

GradedBasis::GradedBasis(std::vector<BasisSymbol> symbols) : symbols_(std::move(symbols)) {
  std::set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.name.empty()) throw Error("empty basis symbol name");
    if (!seen.insert(s.name).second) throw Error("duplicate basis symbol '" + s.name + "'");
  }
}

std::optional<std::uint32_t> GradedBasis::find(const std::string& name) const {
  for (std::uint32_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].name == name) return i;
  }
  return std::nullopt;
}

std::uint32_t GradedBasis::index(const std::string& name) const {
  if (auto i = find(name)) return *i;
  throw Error("unknown basis symbol '" + name + "'");
}

FormalSum::FormalSum(std::shared_ptr<const GradedBasis> basis) : basis_(std::move(basis)) {
  if (!basis_) throw Error("formal sum without a basis");
}

FormalSum FormalSum::of(std::shared_ptr<const GradedBasis> basis,
                        std::initializer_list<std::pair<std::vector<std::string>, Rational>> terms) {
  FormalSum out(std::move(basis));
  for (const auto& [names, c] : terms) {
    Tensor t;
    t.reserve(names.size());
    for (const auto& n : names) t.push_back(out.basis_->index(n));
    out.add(t, c);
  }
  return out;
}

FormalSum FormalSum::basis_element(std::shared_ptr<const GradedBasis> basis, Tensor t,
                                   Rational coeff) {
  FormalSum out(std::move(basis));
  out.add(t, coeff);
  return out;
}

void FormalSum::check_indices(const Tensor& t) const {
  for (auto i : t) {
    if (i >= basis_->dimension()) throw Error("unknown basis symbol #" + std::to_string(i));
  }
}

void FormalSum::add(const Tensor& t, const Rational& coeff) {
  check_indices(t);
  terms_.add(t, coeff);
}

void FormalSum::add(const FormalSum& other, const Rational& scale) {
  if (!same_space(other)) throw Error("space mismatch");
  terms_.add(other.terms_, scale);
}

std::optional<std::size_t> FormalSum::arity() const {
  std::optional<std::size_t> out;
  for (const auto& [t, c] : terms_) {
    if (out && *out != t.size()) return std::nullopt;
    out = t.size();
  }
  return out;
}

int FormalSum::degree(const Tensor& t) const {
  int d = 0;
  for (auto i : t) d += basis_->symbol(i).degree;
  return d;
}

bool FormalSum::same_space(const FormalSum& other) const {
  return basis_ == other.basis_ || *basis_ == *other.basis_;
}

std::string FormalSum::tensor_name(const Tensor& t) const {
  std::string out;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) out += " (x) ";
    out += basis_->symbol(t[k]).name;
  }
  return out;
}

std::string FormalSum::to_string() const {
  if (terms_.empty()) return "(empty)\n";
  std::ostringstream os;
  for (const auto& [t, c] : terms_) os << c << ' ' << tensor_name(t) << '\n';
  return os.str();
}

FormalSum combine(const FormalSum& v, const FormalSum& w, const Rational& c, const Rational& d) {
  if (!v.same_space(w)) throw Error("space mismatch");
  FormalSum out(v.basis_ptr());
  out.add(v, c);
  out.add(w, d);
  return out;
}

FormalSum tensor(const FormalSum& v, const FormalSum& w) {
  if (!v.same_space(w)) throw Error("space mismatch");
  FormalSum out(v.basis_ptr());
  for (const auto& [s, c] : v.terms()) {
    for (const auto& [t, d] : w.terms()) {
      Tensor st = s;
      st.insert(st.end(), t.begin(), t.end());
      out.add(st, c * d);
    }
  }
  return out;
}

int koszul_sign(const GradedBasis& basis, const Tensor& t, std::span<const std::size_t> perm) {
  int sign = 1;
  for (std::size_t a = 0; a < perm.size(); ++a) {
    for (std::size_t b = a + 1; b < perm.size(); ++b) {
      if (perm[a] > perm[b]) {
        const int da = basis.symbol(t[perm[a]]).degree;
        const int db = basis.symbol(t[perm[b]]).degree;
        if ((da * db) % 2 != 0) sign = -sign;
      }
    }
  }
  return sign;
}

namespace {

FormalSum permute_impl(const FormalSum& v, std::span<const std::size_t> perm, bool graded) {
  FormalSum out(v.basis_ptr());
  for (const auto& [t, c] : v.terms()) {
    if (t.size() != perm.size()) {
      throw Error("permutation of arity " + std::to_string(perm.size()) + " applied to a " +
                  std::to_string(t.size()) + "-tensor");
    }
    Tensor p(t.size());
    for (std::size_t j = 0; j < perm.size(); ++j) p[j] = t[perm[j]];
    out.add(p, graded && koszul_sign(v.basis(), t, perm) < 0 ? -c : c);
  }
  return out;
}

}  // namespace

FormalSum permute_graded(const FormalSum& v, std::span<const std::size_t> perm) {
  return permute_impl(v, perm, true);
}

FormalSum permute_factors(const FormalSum& v, std::span<const std::size_t> perm) {
  return permute_impl(v, perm, false);
}

FormalSum swap_graded(const FormalSum& v) {
  static constexpr std::size_t kSwap[] = {1, 0};
  for (const auto& [t, c] : v.terms()) {
    if (t.size() != 2) throw Error("swap_graded: term is not a 2-tensor");
  }
  return permute_graded(v, kSwap);
}

}  // namespace stringtop::linear
