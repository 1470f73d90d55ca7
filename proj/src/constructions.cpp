#include "trialab/constructions.hpp"

#include "trialab/error.hpp"

namespace trialab {

namespace {

BinaryTensor block_binary(const BinaryTensor& a, const BinaryTensor& b) {
  const int na = a.dim(), dim = na + b.dim();
  std::vector<BinaryTensor::Entry> entries;
  entries.reserve(a.entries().size() + b.entries().size());
  for (const auto& e : a.entries()) entries.push_back(e);
  for (const auto& e : b.entries()) entries.push_back({e.i + na, e.j + na, e.k + na, e.c});
  return BinaryTensor::from_entries(dim, std::move(entries));
}

TernaryTensor block_ternary(const TernaryTensor& a, const TernaryTensor& b) {
  const int na = a.dim(), dim = na + b.dim();
  std::vector<TernaryTensor::Entry> entries;
  entries.reserve(a.entries().size() + b.entries().size());
  for (const auto& e : a.entries()) entries.push_back(e);
  for (const auto& e : b.entries()) entries.push_back({e.i + na, e.j + na, e.k + na, e.l + na, e.c});
  return TernaryTensor::from_entries(dim, std::move(entries));
}

}  // namespace

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  if (a.kind() != b.kind()) throw Error("direct sum: algebra kinds differ");
  switch (a.kind()) {
    case AlgebraKind::Associative:
      return Algebra::associative(block_binary(a.product(Slot::Bracket), b.product(Slot::Bracket)));
    case AlgebraKind::Leibniz:
      return Algebra::leibniz(block_binary(a.product(Slot::Bracket), b.product(Slot::Bracket)));
    case AlgebraKind::Triassociative:
      return Algebra::triassociative(block_binary(a.product(Slot::Left), b.product(Slot::Left)),
                                     block_binary(a.product(Slot::Middle), b.product(Slot::Middle)),
                                     block_binary(a.product(Slot::Right), b.product(Slot::Right)));
    case AlgebraKind::TernaryLeibniz:
      return Algebra::ternary_leibniz(block_ternary(a.ternary_product(), b.ternary_product()));
  }
  throw Error("unknown algebra kind");
}

bool graph_is_subalgebra(const Mat& f, const Algebra& a, const Algebra& b) {
  if (a.kind() != b.kind()) throw Error("graph check: algebra kinds differ");
  if (f.rows() != b.dim() || f.cols() != a.dim())
    throw Error("graph check: matrix shape does not match the two dimensions");

  const Algebra sum = direct_sum(a, b);
  const Index na = a.dim(), nb = b.dim();
  Mat rows(na, na + nb);
  rows.setZero();
  for (Index j = 0; j < na; ++j) {
    rows(j, j) = 1;
    for (Index r = 0; r < nb; ++r) rows(j, na + r) = f(r, j);
  }
  const Subspace graph = Subspace::span_of_rows(rows);

  // Bilinearity: closure on a spanning set is closure everywhere.
  if (is_binary_kind(a.kind())) {
    for (Slot slot : sum.slots())
      for (Index p = 0; p < na; ++p)
        for (Index q = 0; q < na; ++q) {
          const Vec prod = sum.evaluate(slot, rows.row(p).transpose(), rows.row(q).transpose());
          if (!graph.contains(prod)) return false;
        }
  } else {
    for (Index p = 0; p < na; ++p)
      for (Index q = 0; q < na; ++q)
        for (Index r = 0; r < na; ++r) {
          const Vec prod = sum.evaluate(rows.row(p).transpose(), rows.row(q).transpose(),
                                        rows.row(r).transpose());
          if (!graph.contains(prod)) return false;
        }
  }
  return true;
}

Subspace annihilator(const Algebra& a) {
  const int dim = a.dim();
  if (dim == 0) return Subspace(0);

  std::vector<Mat> blocks;
  if (is_binary_kind(a.kind())) {
    for (Slot slot : a.slots()) {
      const BinaryTensor& t = a.product(slot);
      Mat right = Mat::Zero(dim * dim, dim);  // rows: x * e_j has zero e_k coordinate
      Mat left = Mat::Zero(dim * dim, dim);   // rows: e_j * x has zero e_k coordinate
      for (const auto& e : t.entries()) {
        right(e.j * dim + e.k, e.i) += e.c;
        left(e.i * dim + e.k, e.j) += e.c;
      }
      blocks.push_back(std::move(right));
      blocks.push_back(std::move(left));
    }
  } else {
    const TernaryTensor& t = a.ternary_product();
    Mat first = Mat::Zero(dim * dim * dim, dim);
    Mat second = Mat::Zero(dim * dim * dim, dim);
    Mat third = Mat::Zero(dim * dim * dim, dim);
    for (const auto& e : t.entries()) {
      first((e.j * dim + e.k) * dim + e.l, e.i) += e.c;
      second((e.i * dim + e.k) * dim + e.l, e.j) += e.c;
      third((e.i * dim + e.j) * dim + e.l, e.k) += e.c;
    }
    blocks.push_back(std::move(first));
    blocks.push_back(std::move(second));
    blocks.push_back(std::move(third));
  }

  Index total_rows = 0;
  for (const Mat& b : blocks) total_rows += b.rows();
  Mat stacked(total_rows, dim);
  Index at = 0;
  for (const Mat& b : blocks) {
    stacked.middleRows(at, b.rows()) = b;
    at += b.rows();
  }
  return kernel(stacked);
}

IdealSide ideal_side_from_string(std::string_view s) {
  if (s == "left") return IdealSide::Left;
  if (s == "right") return IdealSide::Right;
  if (s == "two-sided") return IdealSide::TwoSided;
  if (s == "three-sided") return IdealSide::ThreeSided;
  throw Error("unknown ideal side '" + std::string(s) + "'");
}

std::string_view to_string(IdealSide side) {
  switch (side) {
    case IdealSide::Left: return "left";
    case IdealSide::Right: return "right";
    case IdealSide::TwoSided: return "two-sided";
    case IdealSide::ThreeSided: return "three-sided";
  }
  throw Error("unknown ideal side");
}

IdealSide canonical_ideal_side(AlgebraKind kind) {
  return is_binary_kind(kind) ? IdealSide::TwoSided : IdealSide::ThreeSided;
}

bool ideal_check(const Subspace& s, const Algebra& a, IdealSide side) {
  if (s.ambient_dim() != a.dim())
    throw Error("ideal check: subspace ambient dimension does not match the algebra");
  const bool binary = is_binary_kind(a.kind());
  if (binary && side == IdealSide::ThreeSided)
    throw Error("ideal check: three-sided only applies to the ternary kind");
  if (!binary && side != IdealSide::ThreeSided)
    throw Error("ideal check: ternary kind requires the three-sided check");

  const int dim = a.dim();
  if (binary) {
    const bool member_first = side == IdealSide::Left || side == IdealSide::TwoSided;
    const bool member_second = side == IdealSide::Right || side == IdealSide::TwoSided;
    for (Slot slot : a.slots()) {
      for (Index r = 0; r < s.dim(); ++r) {
        const Vec member = s.basis().row(r).transpose();
        for (int j = 0; j < dim; ++j) {
          const Vec e = unit_vec(dim, j);
          if (member_first && !s.contains(a.evaluate(slot, member, e))) return false;
          if (member_second && !s.contains(a.evaluate(slot, e, member))) return false;
        }
      }
    }
    return true;
  }

  for (Index r = 0; r < s.dim(); ++r) {
    const Vec member = s.basis().row(r).transpose();
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        const Vec ej = unit_vec(dim, j), ek = unit_vec(dim, k);
        if (!s.contains(a.evaluate(member, ej, ek))) return false;
        if (!s.contains(a.evaluate(ej, member, ek))) return false;
        if (!s.contains(a.evaluate(ej, ek, member))) return false;
      }
  }
  return true;
}

QuotientResult quotient(const Algebra& a, const Subspace& ideal) {
  if (!ideal_check(ideal, a, canonical_ideal_side(a.kind())))
    throw Error("quotient: the subspace is not an ideal of the required sidedness");

  const int dim = a.dim();
  const Mat comp = complement_basis(ideal);
  const int qdim = static_cast<int>(comp.rows());

  std::vector<bool> is_pivot(dim, false);
  for (Index p : ideal.pivot_cols()) is_pivot[p] = true;
  std::vector<Index> comp_cols;
  for (Index c = 0; c < dim; ++c)
    if (!is_pivot[c]) comp_cols.push_back(c);

  // Residue after ideal reduction is supported on the complement columns.
  const auto to_quotient = [&](const Vec& v) {
    const Vec res = ideal.reduce(v);
    Vec q(qdim);
    for (int i = 0; i < qdim; ++i) q[i] = res[comp_cols[i]];
    return q;
  };

  Mat projection(qdim, dim);
  for (int j = 0; j < dim; ++j) projection.col(j) = to_quotient(unit_vec(dim, j));

  Algebra result = Algebra::zero(a.kind(), qdim);
  if (is_binary_kind(a.kind())) {
    std::vector<BinaryTensor> tensors;
    for (Slot slot : a.slots()) {
      tensors.push_back(BinaryTensor::build(qdim, [&](int p, int q) {
        return to_quotient(a.evaluate(slot, comp.row(p).transpose(), comp.row(q).transpose()));
      }));
    }
    switch (a.kind()) {
      case AlgebraKind::Associative: result = Algebra::associative(std::move(tensors[0])); break;
      case AlgebraKind::Leibniz: result = Algebra::leibniz(std::move(tensors[0])); break;
      case AlgebraKind::Triassociative:
        result = Algebra::triassociative(std::move(tensors[0]), std::move(tensors[1]),
                                         std::move(tensors[2]));
        break;
      default: break;
    }
  } else {
    result = Algebra::ternary_leibniz(TernaryTensor::build(qdim, [&](int p, int q, int r) {
      return to_quotient(a.evaluate(comp.row(p).transpose(), comp.row(q).transpose(),
                                    comp.row(r).transpose()));
    }));
  }
  return {std::move(result), std::move(projection)};
}

Algebra promote_associative(const Algebra& a) {
  if (a.kind() != AlgebraKind::Associative)
    throw Error("promotion requires an associative algebra");
  if (!check_structure(a).empty())
    throw Error("promotion requires a passing associative algebra");
  const BinaryTensor& p = a.product(Slot::Bracket);
  return Algebra::triassociative(p, p, p, a.basis_names());
}

Algebra opposite_triassociative(const Algebra& a) {
  if (a.kind() != AlgebraKind::Triassociative)
    throw Error("opposite requires a triassociative algebra");
  return Algebra::triassociative(a.product(Slot::Right).transposed_args(),
                                 a.product(Slot::Middle).transposed_args(),
                                 a.product(Slot::Left).transposed_args(), a.basis_names());
}

Algebra swap_ternary_orientation(const Algebra& t) {
  if (t.kind() != AlgebraKind::TernaryLeibniz)
    throw Error("orientation swap requires a ternary-leibniz algebra");
  return Algebra::ternary_leibniz(t.ternary_product().reversed_args(), t.basis_names());
}

}  // namespace trialab
