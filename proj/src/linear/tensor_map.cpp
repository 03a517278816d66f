#include "stringtop/linear/tensor_map.hpp"

#include "stringtop/error.hpp"

namespace stringtop::linear {

namespace {

int tuple_degree(const GradedBasis& basis, const Tensor& t) {
  int d = 0;
  for (auto i : t) d += basis.symbol(i).degree;
  return d;
}

}  // namespace

TensorMap::TensorMap(std::shared_ptr<const GradedBasis> basis, std::size_t in_arity,
                     std::size_t out_arity, int shift)
    : basis_(std::move(basis)), in_arity_(in_arity), out_arity_(out_arity), shift_(shift) {
  if (!basis_) throw Error("tensor map without a basis");
}

TensorMap TensorMap::identity(std::shared_ptr<const GradedBasis> basis, std::size_t arity) {
  TensorMap out(basis, arity, arity);
  if (arity == 0) {
    out.add({}, {}, Rational(1));
    return out;
  }
  const auto dim = static_cast<std::uint32_t>(basis->dimension());
  if (dim == 0) return out;
  Tensor t(arity, 0);
  while (true) {
    out.add(t, t, Rational(1));
    std::size_t k = arity;
    while (k > 0 && ++t[k - 1] == dim) t[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

void TensorMap::check_tuple(const Tensor& t, std::size_t arity, const char* what) const {
  if (t.size() != arity) {
    throw Error(std::string("arity mismatch: ") + what + " tuple of length " +
                std::to_string(t.size()) + ", expected " + std::to_string(arity));
  }
  for (auto i : t) {
    if (i >= basis_->dimension()) throw Error("unknown basis symbol #" + std::to_string(i));
  }
}

void TensorMap::add(const Tensor& in, const Tensor& out, const Rational& coeff) {
  check_tuple(in, in_arity_, "input");
  check_tuple(out, out_arity_, "output");
  auto& image = table_[in];
  image.add(out, coeff);
  if (image.empty()) table_.erase(in);
}

void TensorMap::set_image(const Tensor& in, Combination<Tensor> image) {
  check_tuple(in, in_arity_, "input");
  for (const auto& [t, c] : image) check_tuple(t, out_arity_, "output");
  if (image.empty()) {
    table_.erase(in);
  } else {
    table_[in] = std::move(image);
  }
}

const Combination<Tensor>* TensorMap::image(const Tensor& in) const {
  auto it = table_.find(in);
  return it == table_.end() ? nullptr : &it->second;
}

std::optional<std::pair<Tensor, Tensor>> TensorMap::homogeneity_violation() const {
  for (const auto& [in, image] : table_) {
    const int want = tuple_degree(*basis_, in) + shift_;
    for (const auto& [out, c] : image) {
      if (tuple_degree(*basis_, out) != want) return std::make_pair(in, out);
    }
  }
  return std::nullopt;
}

FormalSum apply_tensor_map(const TensorMap& map, const FormalSum& v) {
  for (const auto& [t, c] : v.terms()) {
    if (t.size() != map.in_arity()) {
      throw Error("arity mismatch: map of input arity " + std::to_string(map.in_arity()) +
                  " applied to a " + std::to_string(t.size()) + "-tensor");
    }
  }
  return apply_at(map, v, 0);
}

FormalSum apply_at(const TensorMap& map, const FormalSum& v, std::size_t offset) {
  if (!(map.basis() == v.basis())) throw Error("space mismatch");
  FormalSum out(v.basis_ptr());
  const std::size_t k = map.in_arity();
  for (const auto& [t, c] : v.terms()) {
    if (t.size() < offset + k) {
      throw Error("arity mismatch: map of input arity " + std::to_string(k) + " at offset " +
                  std::to_string(offset) + " applied to a " + std::to_string(t.size()) +
                  "-tensor");
    }
    const Tensor in(t.begin() + static_cast<std::ptrdiff_t>(offset),
                    t.begin() + static_cast<std::ptrdiff_t>(offset + k));
    const auto* image = map.image(in);
    if (!image) continue;
    for (const auto& [o, d] : *image) {
      Tensor r(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(offset));
      r.insert(r.end(), o.begin(), o.end());
      r.insert(r.end(), t.begin() + static_cast<std::ptrdiff_t>(offset + k), t.end());
      out.add(r, c * d);
    }
  }
  return out;
}

}  // namespace stringtop::linear
