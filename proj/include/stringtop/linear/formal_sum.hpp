#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stringtop/linear/combination.hpp"
#include "stringtop/linear/rational.hpp"

namespace stringtop::linear {

struct BasisSymbol {
  std::string name;
  int degree = 0;

  friend bool operator==(const BasisSymbol&, const BasisSymbol&) = default;
};

/// An ordered list of graded basis symbols. Names are unique; declaration
/// order is the canonical order of the space.
class GradedBasis {
 public:
  explicit GradedBasis(std::vector<BasisSymbol> symbols);

  static std::shared_ptr<const GradedBasis> make(std::vector<BasisSymbol> symbols) {
    return std::make_shared<const GradedBasis>(std::move(symbols));
  }

  std::size_t dimension() const { return symbols_.size(); }
  const BasisSymbol& symbol(std::uint32_t index) const { return symbols_.at(index); }
  const std::vector<BasisSymbol>& symbols() const { return symbols_; }

  std::optional<std::uint32_t> find(const std::string& name) const;
  /// Throws stringtop::Error("unknown basis symbol ...") when absent.
  std::uint32_t index(const std::string& name) const;

  friend bool operator==(const GradedBasis& a, const GradedBasis& b) { return a.symbols_ == b.symbols_; }

 private:
  std::vector<BasisSymbol> symbols_;
};

/// A basis element of V^{⊗k}: indices into a GradedBasis.
using Tensor = std::vector<std::uint32_t>;

/// Sparse element of ⊕_k V^{⊗k} over a fixed graded basis.
class FormalSum {
 public:
  explicit FormalSum(std::shared_ptr<const GradedBasis> basis);

  /// Builds a sum from named tensors, e.g. {{{"e", "x"}, 1}, {{"x", "e"}, 1}}.
  static FormalSum of(std::shared_ptr<const GradedBasis> basis,
                      std::initializer_list<std::pair<std::vector<std::string>, Rational>> terms);
  static FormalSum basis_element(std::shared_ptr<const GradedBasis> basis, Tensor t,
                                 Rational coeff = Rational(1));

  const GradedBasis& basis() const { return *basis_; }
  const std::shared_ptr<const GradedBasis>& basis_ptr() const { return basis_; }
  const Combination<Tensor>& terms() const { return terms_; }

  void add(const Tensor& t, const Rational& coeff);
  void add(const FormalSum& other, const Rational& scale = Rational(1));

  bool is_zero() const { return terms_.empty(); }
  /// Common tensor arity of all terms; nullopt for the zero sum or mixed arities.
  std::optional<std::size_t> arity() const;
  int degree(const Tensor& t) const;

  bool same_space(const FormalSum& other) const;

  /// Sum of `p/q s1 (x) s2 ...` lines in canonical order, or `(empty)`.
  std::string to_string() const;
  std::string tensor_name(const Tensor& t) const;

  friend bool operator==(const FormalSum& a, const FormalSum& b) {
    return a.same_space(b) && a.terms_ == b.terms_;
  }

 private:
  void check_indices(const Tensor& t) const;

  std::shared_ptr<const GradedBasis> basis_;
  Combination<Tensor> terms_;
};

/// c·v + d·w. Throws stringtop::Error("space mismatch") for different bases.
FormalSum combine(const FormalSum& v, const FormalSum& w, const Rational& c, const Rational& d);

/// Bilinear extension of (s, t) -> s ⊗ t (tuple concatenation).
FormalSum tensor(const FormalSum& v, const FormalSum& w);

/// b1⊗b2 -> (−1)^{|b1||b2|} b2⊗b1. Throws if a term is not a 2-tensor.
FormalSum swap_graded(const FormalSum& v);

/// Reorders tensor factors: output factor j is input factor perm[j]. The
/// Koszul sign of the permutation is applied. Every term must have arity
/// perm.size().
FormalSum permute_graded(const FormalSum& v, std::span<const std::size_t> perm);

/// Same reordering as permute_graded but without any sign.
FormalSum permute_factors(const FormalSum& v, std::span<const std::size_t> perm);

/// Sign (+1/−1) picked up by moving the factors of `t` into the order `perm`.
int koszul_sign(const GradedBasis& basis, const Tensor& t, std::span<const std::size_t> perm);

}  // namespace stringtop::linear
