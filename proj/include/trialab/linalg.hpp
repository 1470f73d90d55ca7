#pragma once

#include <Eigen/Core>

#include <vector>

#include "trialab/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<trialab::Rational> : GenericNumTraits<trialab::Rational> {
  typedef trialab::Rational Real;
  typedef trialab::Rational NonInteger;
  typedef trialab::Rational Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace trialab {

using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

inline bool is_zero(const Vec& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return false;
  return true;
}

inline bool mat_equal(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

inline Vec unit_vec(Index dim, Index i) {
  Vec v = Vec::Zero(dim);
  v[i] = 1;
  return v;
}

/// Unique reduced row-echelon form; preserves the row space.
Mat rref(Mat m);

/// Pivot columns of a matrix already in RREF, in increasing order.
std::vector<Index> pivot_columns(const Mat& rref_form);

/// A linear subspace held in canonical form: the basis rows are the RREF of
/// any spanning set, zero rows dropped. Equality of subspaces is equality of
/// this canonical form.
class Subspace {
 public:
  /// The zero subspace of the given ambient dimension.
  explicit Subspace(Index ambient_dim);

  /// Canonicalizes arbitrary spanning rows (rows.cols() is the ambient dim).
  static Subspace span_of_rows(const Mat& rows);
  static Subspace full(Index ambient_dim);

  Index dim() const { return basis_.rows(); }
  Index ambient_dim() const { return ambient_; }
  const Mat& basis() const { return basis_; }
  const std::vector<Index>& pivot_cols() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  /// v minus its projection along the basis rows: the residue has zeros in
  /// every pivot column, and is zero exactly when v lies in the subspace.
  Vec reduce(Vec v) const;

  /// Coordinates of a member vector in the basis rows; throws if v is
  /// not a member.
  Vec coordinates(const Vec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.dim() == b.dim() && mat_equal(a.basis_, b.basis_);
  }

 private:
  Index ambient_;
  Mat basis_;
  std::vector<Index> pivots_;
};

/// Null space of m (solutions of m x = 0) in canonical form.
Subspace kernel(const Mat& m);

/// Column space of m in canonical form (RREF of the transposed columns).
Subspace image(const Mat& m);

/// Rows extending s.basis to a basis of the ambient space: the standard basis
/// vectors at the non-pivot columns of s, in increasing index order.
Mat complement_basis(const Subspace& s);

}  // namespace trialab
