#include "trialab/functors.hpp"

#include "trialab/error.hpp"
#include "trialab/operators.hpp"

namespace trialab {

TernaryVariant ternary_variant_from_string(std::string_view s) {
  if (s == "main") return TernaryVariant::Main;
  if (s == "b1") return TernaryVariant::B1;
  if (s == "b2") return TernaryVariant::B2;
  throw Error("unknown ternary bracket variant '" + std::string(s) + "'");
}

Algebra t_from_triassoc(const Algebra& a, TernaryVariant variant) {
  if (a.kind() != AlgebraKind::Triassociative)
    throw Error("ternary bracket construction requires a triassociative algebra");
  if (!check_structure(a).empty())
    throw Error("ternary bracket construction: input fails its structure check");

  const int dim = a.dim();
  const BinaryTensor& left = a.product(Slot::Left);
  const BinaryTensor& middle = a.product(Slot::Middle);
  const BinaryTensor& right = a.product(Slot::Right);

  // Each term is expanded separately so the brackets stay exact sparse sums.
  return Algebra::ternary_leibniz(
      TernaryTensor::build(dim,
                           [&](int x, int y, int z) -> Vec {
                             const Vec ex = unit_vec(dim, x);
                             const Vec yz = middle.basis_product(y, z);
                             const Vec zy = middle.basis_product(z, y);
                             switch (variant) {
                               case TernaryVariant::Main:
                                 return left.apply(ex, yz) - left.apply(ex, zy) -
                                        right.apply(yz, ex) + right.apply(zy, ex);
                               case TernaryVariant::B1:
                                 return left.apply(ex, yz) - right.apply(yz, ex);
                               case TernaryVariant::B2:
                                 return right.apply(zy, ex) - left.apply(ex, zy);
                             }
                             throw Error("unknown ternary bracket variant");
                           }),
      a.basis_names());
}

Algebra t_from_leibniz(const Algebra& l) {
  if (l.kind() != AlgebraKind::Leibniz)
    throw Error("nested-bracket construction requires a leibniz algebra");
  if (!check_structure(l).empty())
    throw Error("nested-bracket construction: input fails its structure check");

  const int dim = l.dim();
  const BinaryTensor& br = l.product(Slot::Bracket);
  return Algebra::ternary_leibniz(
      TernaryTensor::build(dim,
                           [&](int x, int y, int z) -> Vec {
                             return br.apply(unit_vec(dim, x), br.basis_product(y, z));
                           }),
      l.basis_names());
}

Algebra ternary_from_assoc_averaging(const Algebra& a, const Mat& beta) {
  if (a.kind() != AlgebraKind::Associative)
    throw Error("averaging ternary bracket requires an associative algebra");
  if (!check_structure(a).empty())
    throw Error("averaging ternary bracket: input fails its structure check");
  if (!check_operator(a, beta, OperatorKind::averaging()).empty())
    throw Error("averaging ternary bracket: the map fails the averaging check");

  const int dim = a.dim();
  const BinaryTensor& p = a.product(Slot::Bracket);
  return Algebra::ternary_leibniz(
      TernaryTensor::build(dim,
                           [&](int x, int y, int z) -> Vec {
                             const Vec ex = unit_vec(dim, x), ey = unit_vec(dim, y);
                             const Vec bz = beta.col(z);
                             return p.apply(p.apply(ex, ey), bz) - p.apply(p.apply(ex, bz), ey) -
                                    p.apply(p.apply(ey, bz), ex) + p.apply(p.apply(bz, ey), ex);
                           }),
      a.basis_names());
}

}  // namespace trialab
