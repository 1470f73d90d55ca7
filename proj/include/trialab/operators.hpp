#pragma once

#include "trialab/algebra.hpp"

namespace trialab {

/// Which defining identity a linear map is checked against. The weight is
/// part of the operator, not the algebra: one map can be Rota-Baxter at
/// several weights, so every check pins one.
struct OperatorKind {
  enum class Tag { RotaBaxter, Nijenhuis, Reynolds, Averaging, Centroid };

  Tag tag = Tag::RotaBaxter;
  Rational weight;  // meaningful only for RotaBaxter

  static OperatorKind rota_baxter(Rational w) { return {Tag::RotaBaxter, std::move(w)}; }
  static OperatorKind nijenhuis() { return {Tag::Nijenhuis, 0}; }
  static OperatorKind reynolds() { return {Tag::Reynolds, 0}; }
  static OperatorKind averaging() { return {Tag::Averaging, 0}; }
  static OperatorKind centroid() { return {Tag::Centroid, 0}; }

  std::string str() const;
};

OperatorKind::Tag operator_tag_from_string(std::string_view s);
std::string_view to_string(OperatorKind::Tag tag);

/// Evaluates the operator's defining identity on all basis pairs (triples for
/// the ternary kind) for every product slot. Reynolds, averaging and centroid
/// are defined for the binary kinds only; requesting them on a ternary
/// algebra is an input error. Averaging and centroid produce two violations
/// families ("-1-", "-2-") because their definitions are chains of two
/// equalities.
ViolationReport check_operator(const Algebra& a, const Mat& m, const OperatorKind& kind);

/// The derived product attached to a passing operator:
///   rota-baxter  x . y = R(x)y + xR(y) + w xy      (7-term ternary form)
///   nijenhuis    x . y = N(x)y + xN(y) - N(xy)     (nested ternary form)
///   reynolds     x . y = P(x)y + xP(y) - P(x)P(y)
///   averaging / centroid   x . y = m(x)y
/// per product slot, same kind as the input. Throws if the operator check
/// fails, or (averaging) if the map is not injective.
Algebra derive_from_operator(const Algebra& a, const Mat& m, const OperatorKind& kind);

/// For a Rota-Baxter operator on a Leibniz algebra, the iterated bracket of
/// the derived Leibniz algebra and the Rota-Baxter-derived ternary bracket of
/// the nested-bracket ternary algebra must coincide tensor-for-tensor.
/// Returns that comparison; false signals a defect.
bool rb_iterated_vs_ternary(const Algebra& l, const Mat& r, const Rational& weight);

/// Exhaustive search over square matrices with entries drawn from the grid,
/// returning those passing check_operator, in lexicographic matrix order
/// (row-major, grid order as given).
std::vector<Mat> search_operators(const Algebra& a, const OperatorKind& kind,
                                  const std::vector<Rational>& grid);

}  // namespace trialab
