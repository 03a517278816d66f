#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "stringtop/linear/formal_sum.hpp"
#include "stringtop/linear/tensor_map.hpp"

namespace stringtop::dialgebra {

using linear::FormalSum;
using linear::GradedBasis;
using linear::Rational;
using linear::Tensor;
using linear::TensorMap;

/// A finite-dimensional graded space with a product V⊗V -> V and a
/// coproduct V -> V⊗V, both given by structure constants. No compatibility
/// between the two is assumed.
///
/// Lie structures use the same container with the bracket stored as the
/// product.
struct Dialgebra {
  Dialgebra(std::string name, std::shared_ptr<const GradedBasis> basis);

  /// Throws stringtop::Error if a structure constant breaks degree
  /// homogeneity or the unit is not a basis index.
  void validate() const;

  const GradedBasis& space() const { return *basis; }
  FormalSum element(const std::string& symbol, Rational coeff = Rational(1)) const;
  FormalSum zero() const { return FormalSum(basis); }

  std::string name;
  std::shared_ptr<const GradedBasis> basis;
  std::optional<std::uint32_t> unit;
  TensorMap product;    // 2 -> 1
  TensorMap coproduct;  // 1 -> 2

  friend bool operator==(const Dialgebra& a, const Dialgebra& b) {
    return a.name == b.name && *a.basis == *b.basis && a.unit == b.unit &&
           a.product == b.product && a.coproduct == b.coproduct;
  }
};

/// Bilinear product of two 1-tensors.
FormalSum multiply(const Dialgebra& d, const FormalSum& a, const FormalSum& b);
/// Linear coproduct of a 1-tensor.
FormalSum comultiply(const Dialgebra& d, const FormalSum& a);

/// a·(b⊗c) = (a·b)⊗c.
FormalSum act_left(const Dialgebra& d, const FormalSum& a, const FormalSum& pair);
/// (a⊗b)·c = a⊗(b·c).
FormalSum act_right(const Dialgebra& d, const FormalSum& pair, const FormalSum& c);
/// a·(b⊗c) = [a,b]⊗c + b⊗[a,c] with the product read as a bracket.
FormalSum act_lie(const Dialgebra& d, const FormalSum& a, const FormalSum& pair);

}  // namespace stringtop::dialgebra
