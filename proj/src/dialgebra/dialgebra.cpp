#include "stringtop/dialgebra/dialgebra.hpp"

#include "stringtop/error.hpp"

namespace stringtop::dialgebra {

namespace {

void require_vectors(const FormalSum& v, const char* what) {
  for (const auto& [t, c] : v.terms()) {
    if (t.size() != 1) throw Error(std::string(what) + ": expected an element of V");
  }
}

void require_pairs(const FormalSum& v, const char* what) {
  for (const auto& [t, c] : v.terms()) {
    if (t.size() != 2) throw Error(std::string(what) + ": expected an element of V⊗V");
  }
}

}  // namespace

Dialgebra::Dialgebra(std::string name_, std::shared_ptr<const GradedBasis> basis_)
    : name(std::move(name_)), basis(basis_), product(basis_, 2, 1), coproduct(basis_, 1, 2) {}

void Dialgebra::validate() const {
  if (unit && *unit >= basis->dimension()) throw Error("unit is not a basis element");
  if (auto bad = product.homogeneity_violation()) {
    throw Error("product constant " + basis->symbol(bad->first[0]).name + " " +
                basis->symbol(bad->first[1]).name + " -> " + basis->symbol(bad->second[0]).name +
                " violates degree homogeneity");
  }
  if (auto bad = coproduct.homogeneity_violation()) {
    throw Error("coproduct constant " + basis->symbol(bad->first[0]).name + " -> " +
                basis->symbol(bad->second[0]).name + " " + basis->symbol(bad->second[1]).name +
                " violates degree homogeneity");
  }
}

FormalSum Dialgebra::element(const std::string& symbol, Rational coeff) const {
  return FormalSum::basis_element(basis, {basis->index(symbol)}, std::move(coeff));
}

FormalSum multiply(const Dialgebra& d, const FormalSum& a, const FormalSum& b) {
  require_vectors(a, "multiply");
  require_vectors(b, "multiply");
  return linear::apply_tensor_map(d.product, linear::tensor(a, b));
}

FormalSum comultiply(const Dialgebra& d, const FormalSum& a) {
  require_vectors(a, "comultiply");
  return linear::apply_tensor_map(d.coproduct, a);
}

FormalSum act_left(const Dialgebra& d, const FormalSum& a, const FormalSum& pair) {
  require_vectors(a, "module action");
  require_pairs(pair, "module action");
  return linear::apply_at(d.product, linear::tensor(a, pair), 0);
}

FormalSum act_right(const Dialgebra& d, const FormalSum& pair, const FormalSum& c) {
  require_pairs(pair, "module action");
  require_vectors(c, "module action");
  return linear::apply_at(d.product, linear::tensor(pair, c), 1);
}

FormalSum act_lie(const Dialgebra& d, const FormalSum& a, const FormalSum& pair) {
  static constexpr std::size_t kMoveFirstToMiddle[] = {1, 0, 2};
  require_vectors(a, "Lie action");
  require_pairs(pair, "Lie action");
  const FormalSum abc = linear::tensor(a, pair);
  FormalSum out = linear::apply_at(d.product, abc, 0);
  out.add(linear::apply_at(d.product, linear::permute_factors(abc, kMoveFirstToMiddle), 1));
  return out;
}

}  // namespace stringtop::dialgebra
