#include "trialab/linalg.hpp"

#include <algorithm>

namespace trialab {

Mat rref(Mat m) {
  const Index rows = m.rows(), cols = m.cols();
  Index pivot_row = 0;
  for (Index col = 0; col < cols && pivot_row < rows; ++col) {
    Index found = -1;
    for (Index r = pivot_row; r < rows; ++r) {
      if (!m(r, col).is_zero()) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    if (found != pivot_row) m.row(pivot_row).swap(m.row(found));
    const Rational pivot = m(pivot_row, col);
    if (!pivot.is_one()) m.row(pivot_row) /= pivot;
    for (Index r = 0; r < rows; ++r) {
      if (r == pivot_row) continue;
      const Rational factor = m(r, col);
      if (factor.is_zero()) continue;
      m.row(r) -= factor * m.row(pivot_row);
    }
    ++pivot_row;
  }
  return m;
}

std::vector<Index> pivot_columns(const Mat& rref_form) {
  std::vector<Index> pivots;
  for (Index r = 0; r < rref_form.rows(); ++r) {
    for (Index c = 0; c < rref_form.cols(); ++c) {
      if (!rref_form(r, c).is_zero()) {
        pivots.push_back(c);
        break;
      }
    }
  }
  return pivots;
}

Subspace::Subspace(Index ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span_of_rows(const Mat& rows) {
  Subspace s(rows.cols());
  Mat r = rref(rows);
  Index nonzero = 0;
  for (Index i = 0; i < r.rows(); ++i) {
    bool zero = true;
    for (Index j = 0; j < r.cols(); ++j)
      if (!r(i, j).is_zero()) {
        zero = false;
        break;
      }
    if (zero) break;  // in RREF all zero rows sink to the bottom
    ++nonzero;
  }
  s.basis_ = r.topRows(nonzero);
  s.pivots_ = pivot_columns(s.basis_);
  return s;
}

Subspace Subspace::full(Index ambient_dim) {
  return span_of_rows(Mat::Identity(ambient_dim, ambient_dim));
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != ambient_)
    throw Error("subspace reduce: vector length does not match ambient dimension");
  for (Index r = 0; r < basis_.rows(); ++r) {
    const Rational coeff = v[pivots_[r]];
    if (!coeff.is_zero()) v -= coeff * basis_.row(r).transpose();
  }
  return v;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error("subspace containment: ambient dimensions differ");
  for (Index r = 0; r < other.basis_.rows(); ++r)
    if (!contains(other.basis_.row(r).transpose())) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) throw Error("coordinates: vector is not a member of the subspace");
  Vec coords(dim());
  for (Index r = 0; r < dim(); ++r) coords[r] = v[pivots_[r]];
  return coords;
}

Subspace kernel(const Mat& m) {
  const Index cols = m.cols();
  Mat r = rref(m);
  std::vector<Index> pivots = pivot_columns(r);
  std::vector<bool> is_pivot(cols, false);
  for (Index p : pivots) is_pivot[p] = true;

  Mat basis(cols - static_cast<Index>(pivots.size()), cols);
  Index row = 0;
  for (Index freec = 0; freec < cols; ++freec) {
    if (is_pivot[freec]) continue;
    Vec x = Vec::Zero(cols);
    x[freec] = 1;
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = -r(static_cast<Index>(pr), freec);
    basis.row(row++) = x.transpose();
  }
  return Subspace::span_of_rows(basis);
}

Subspace image(const Mat& m) { return Subspace::span_of_rows(m.transpose()); }

Mat complement_basis(const Subspace& s) {
  const Index n = s.ambient_dim();
  std::vector<bool> is_pivot(n, false);
  for (Index p : s.pivot_cols()) is_pivot[p] = true;
  Mat rows(n - s.dim(), n);
  rows.setZero();
  Index r = 0;
  for (Index c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    rows(r, c) = 1;
    ++r;
  }
  return rows;
}

}  // namespace trialab
