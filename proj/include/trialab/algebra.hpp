#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trialab/report.hpp"
#include "trialab/tensor.hpp"

namespace trialab {

enum class AlgebraKind { Associative, Triassociative, Leibniz, TernaryLeibniz };

/// Product selector. Triassociative algebras carry Left, Middle, Right;
/// associative and Leibniz algebras a single Bracket; ternary Leibniz
/// algebras a single Bracket3.
enum class Slot { Left, Middle, Right, Bracket, Bracket3 };

std::string_view to_string(AlgebraKind kind);
std::string_view to_string(Slot slot);
AlgebraKind algebra_kind_from_string(std::string_view s);

bool is_binary_kind(AlgebraKind kind);

/// Finite-dimensional algebra given by structure constants. Immutable after
/// construction; equality is exact equality of kind, dimension and canonical
/// tensors.
class Algebra {
 public:
  static Algebra associative(BinaryTensor product, std::vector<std::string> basis_names = {});
  static Algebra leibniz(BinaryTensor bracket, std::vector<std::string> basis_names = {});
  static Algebra triassociative(BinaryTensor left, BinaryTensor middle, BinaryTensor right,
                                std::vector<std::string> basis_names = {});
  static Algebra ternary_leibniz(TernaryTensor bracket, std::vector<std::string> basis_names = {});

  /// Zero-product algebra of any kind and dimension.
  static Algebra zero(AlgebraKind kind, int dim);

  AlgebraKind kind() const { return kind_; }
  int dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  bool has_default_basis_names() const;

  /// The product slots present for this algebra's kind.
  const std::vector<Slot>& slots() const;

  const BinaryTensor& product(Slot slot) const;
  const TernaryTensor& ternary_product() const;

  /// Multilinear evaluation of the selected product on coordinate vectors.
  Vec evaluate(Slot slot, const Vec& x, const Vec& y) const;
  Vec evaluate(const Vec& x, const Vec& y, const Vec& z) const;

  friend bool operator==(const Algebra& a, const Algebra& b);

 private:
  Algebra() = default;

  AlgebraKind kind_ = AlgebraKind::Associative;
  int dim_ = 0;
  std::vector<std::string> basis_names_;
  std::vector<BinaryTensor> binary_;  // {bracket} or {left, middle, right}
  TernaryTensor ternary_;
};

std::vector<std::string> default_basis_names(int dim);

/// Evaluates every defining identity of the algebra's kind on every basis
/// tuple (triples for the binary kinds, 5-tuples for the ternary identity)
/// and reports each failure with its axiom id, witness tuple and exact
/// discrepancy. Violations come back sorted by (axiom id, witness).
///
/// Axiom ids: "assoc", "tri-(1)".."tri-(11)", "leibniz", "ternary-leibniz".
ViolationReport check_structure(const Algebra& a);

/// Left-orientation ternary identity
///   {x,y,{z,t,u}} = {{x,y,z},t,u} + {z,{x,y,t},u} + {z,t,{x,y,u}} ;
/// used to validate orientation-swapped brackets. Axiom id
/// "ternary-leibniz-left".
ViolationReport check_left_ternary_structure(const Algebra& a);

/// Checks f(x * y) = f(x) * f(y) (and the ternary analogue) for every product
/// slot on all basis tuples. f maps src coordinates to dst coordinates, one
/// column per src basis vector. Axiom ids "morphism-<slot>".
ViolationReport check_morphism(const Mat& f, const Algebra& src, const Algebra& dst);

}  // namespace trialab
