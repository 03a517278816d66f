#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "stringtop/linear/formal_sum.hpp"

namespace stringtop::linear {

/// A linear map V^{⊗in} -> V^{⊗out} stored as structure constants.
///
/// Tuples missing from the table map to zero. `shift` is the declared
/// degree of the map.
class TensorMap {
 public:
  TensorMap(std::shared_ptr<const GradedBasis> basis, std::size_t in_arity,
            std::size_t out_arity, int shift = 0);

  static TensorMap identity(std::shared_ptr<const GradedBasis> basis, std::size_t arity);
  static TensorMap zero(std::shared_ptr<const GradedBasis> basis, std::size_t in_arity,
                        std::size_t out_arity) {
    return TensorMap(std::move(basis), in_arity, out_arity);
  }

  /// Adds `coeff · out` to the image of `in`.
  void add(const Tensor& in, const Tensor& out, const Rational& coeff);
  /// Replaces the image of `in`.
  void set_image(const Tensor& in, Combination<Tensor> image);

  const GradedBasis& basis() const { return *basis_; }
  const std::shared_ptr<const GradedBasis>& basis_ptr() const { return basis_; }
  std::size_t in_arity() const { return in_arity_; }
  std::size_t out_arity() const { return out_arity_; }
  int shift() const { return shift_; }
  void set_shift(int shift) { shift_ = shift; }

  /// Nonzero images only, keyed by input tuple in canonical order.
  const std::map<Tensor, Combination<Tensor>>& table() const { return table_; }
  const Combination<Tensor>* image(const Tensor& in) const;

  /// First (input, output) pair violating deg(out) = deg(in) + shift.
  std::optional<std::pair<Tensor, Tensor>> homogeneity_violation() const;

  friend bool operator==(const TensorMap& a, const TensorMap& b) {
    return a.in_arity_ == b.in_arity_ && a.out_arity_ == b.out_arity_ && a.shift_ == b.shift_ &&
           *a.basis_ == *b.basis_ && a.table_ == b.table_;
  }

 private:
  void check_tuple(const Tensor& t, std::size_t arity, const char* what) const;

  std::shared_ptr<const GradedBasis> basis_;
  std::size_t in_arity_;
  std::size_t out_arity_;
  int shift_;
  std::map<Tensor, Combination<Tensor>> table_;
};

/// Linear extension of `map` to `v`. Every term of `v` must have arity
/// map.in_arity().
FormalSum apply_tensor_map(const TensorMap& map, const FormalSum& v);

/// id^{⊗offset} ⊗ map ⊗ id^{⊗rest}, applied without Koszul signs.
FormalSum apply_at(const TensorMap& map, const FormalSum& v, std::size_t offset);

}  // namespace stringtop::linear
