#include "trialab/operators.hpp"

#include "trialab/error.hpp"
#include "trialab/functors.hpp"

namespace trialab {

std::string_view to_string(OperatorKind::Tag tag) {
  switch (tag) {
    case OperatorKind::Tag::RotaBaxter: return "rota-baxter";
    case OperatorKind::Tag::Nijenhuis: return "nijenhuis";
    case OperatorKind::Tag::Reynolds: return "reynolds";
    case OperatorKind::Tag::Averaging: return "averaging";
    case OperatorKind::Tag::Centroid: return "centroid";
  }
  throw Error("unknown operator kind");
}

OperatorKind::Tag operator_tag_from_string(std::string_view s) {
  if (s == "rota-baxter") return OperatorKind::Tag::RotaBaxter;
  if (s == "nijenhuis") return OperatorKind::Tag::Nijenhuis;
  if (s == "reynolds") return OperatorKind::Tag::Reynolds;
  if (s == "averaging") return OperatorKind::Tag::Averaging;
  if (s == "centroid") return OperatorKind::Tag::Centroid;
  throw Error("unknown operator kind '" + std::string(s) + "'");
}

std::string OperatorKind::str() const {
  std::string s(to_string(tag));
  if (tag == Tag::RotaBaxter) s += "(weight " + weight.str() + ")";
  return s;
}

namespace {

void validate_operator_shape(const Algebra& a, const Mat& m, const OperatorKind& kind) {
  if (m.rows() != a.dim() || m.cols() != a.dim())
    throw Error("operator check: matrix must be square of the algebra's dimension");
  if (!is_binary_kind(a.kind()) && kind.tag != OperatorKind::Tag::RotaBaxter &&
      kind.tag != OperatorKind::Tag::Nijenhuis)
    throw Error("operator kind '" + std::string(to_string(kind.tag)) +
                "' is not defined for ternary-leibniz algebras");
}

}  // namespace

ViolationReport check_operator(const Algebra& a, const Mat& m, const OperatorKind& kind) {
  validate_operator_shape(a, m, kind);
  const int dim = a.dim();
  ViolationReport report;

  if (is_binary_kind(a.kind())) {
    for (Slot slot : a.slots()) {
      const BinaryTensor& p = a.product(slot);
      const std::string suffix = std::string(to_string(slot));
      for (int i = 0; i < dim; ++i) {
        const Vec ei = unit_vec(dim, i);
        const Vec mi = m.col(i);
        for (int j = 0; j < dim; ++j) {
          const Vec ej = unit_vec(dim, j);
          const Vec mj = m.col(j);
          const Vec both = p.apply(mi, mj);
          switch (kind.tag) {
            case OperatorKind::Tag::RotaBaxter: {
              const Vec inner = p.apply(mi, ej) + p.apply(ei, mj) + kind.weight * p.basis_product(i, j);
              const Vec diff = both - m * inner;
              if (!is_zero(diff)) report.add("rota-baxter-" + suffix, {i, j}, diff);
              break;
            }
            case OperatorKind::Tag::Nijenhuis: {
              const Vec inner = p.apply(mi, ej) + p.apply(ei, mj) - m * p.basis_product(i, j);
              const Vec diff = both - m * inner;
              if (!is_zero(diff)) report.add("nijenhuis-" + suffix, {i, j}, diff);
              break;
            }
            case OperatorKind::Tag::Reynolds: {
              const Vec inner = p.apply(mi, ej) + p.apply(ei, mj) - both;
              const Vec diff = both - m * inner;
              if (!is_zero(diff)) report.add("reynolds-" + suffix, {i, j}, diff);
              break;
            }
            case OperatorKind::Tag::Averaging: {
              const Vec diff1 = both - m * p.apply(mi, ej);
              if (!is_zero(diff1)) report.add("averaging-1-" + suffix, {i, j}, diff1);
              const Vec diff2 = both - m * p.apply(ei, mj);
              if (!is_zero(diff2)) report.add("averaging-2-" + suffix, {i, j}, diff2);
              break;
            }
            case OperatorKind::Tag::Centroid: {
              const Vec image_of_product = m * p.basis_product(i, j);
              const Vec diff1 = p.apply(mi, ej) - image_of_product;
              if (!is_zero(diff1)) report.add("centroid-1-" + suffix, {i, j}, diff1);
              const Vec diff2 = p.apply(ei, mj) - image_of_product;
              if (!is_zero(diff2)) report.add("centroid-2-" + suffix, {i, j}, diff2);
              break;
            }
          }
        }
      }
    }
    report.sort();
    return report;
  }

  const TernaryTensor& t = a.ternary_product();
  const Rational& w = kind.weight;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        const Vec ei = unit_vec(dim, i), ej = unit_vec(dim, j), ek = unit_vec(dim, k);
        const Vec mi = m.col(i), mj = m.col(j), mk = m.col(k);
        const Vec both = t.apply(mi, mj, mk);
        if (kind.tag == OperatorKind::Tag::RotaBaxter) {
          const Vec inner = t.apply(mi, mj, ek) + t.apply(mi, ej, mk) + t.apply(ei, mj, mk) +
                            w * (t.apply(mi, ej, ek) + t.apply(ei, mj, ek) + t.apply(ei, ej, mk)) +
                            w * w * t.basis_bracket(i, j, k);
          const Vec diff = both - m * inner;
          if (!is_zero(diff)) report.add("rota-baxter-bracket3", {i, j, k}, diff);
        } else {
          const Vec two = t.apply(mi, mj, ek) + t.apply(mi, ej, mk) + t.apply(ei, mj, mk);
          const Vec one = t.apply(mi, ej, ek) + t.apply(ei, mj, ek) + t.apply(ei, ej, mk);
          const Vec inner = two - m * one + m * (m * t.basis_bracket(i, j, k));
          const Vec diff = both - m * inner;
          if (!is_zero(diff)) report.add("nijenhuis-bracket3", {i, j, k}, diff);
        }
      }
  report.sort();
  return report;
}

Algebra derive_from_operator(const Algebra& a, const Mat& m, const OperatorKind& kind) {
  validate_operator_shape(a, m, kind);
  if (!check_operator(a, m, kind).empty())
    throw Error("derive: the map fails the " + kind.str() + " check");
  if (kind.tag == OperatorKind::Tag::Averaging && kernel(m).dim() != 0)
    throw Error("derive: averaging requires an injective map");

  const int dim = a.dim();
  if (is_binary_kind(a.kind())) {
    std::vector<BinaryTensor> derived;
    for (Slot slot : a.slots()) {
      const BinaryTensor& p = a.product(slot);
      derived.push_back(BinaryTensor::build(dim, [&](int i, int j) -> Vec {
        const Vec ei = unit_vec(dim, i), ej = unit_vec(dim, j);
        const Vec mi = m.col(i), mj = m.col(j);
        switch (kind.tag) {
          case OperatorKind::Tag::RotaBaxter:
            return p.apply(mi, ej) + p.apply(ei, mj) + kind.weight * p.basis_product(i, j);
          case OperatorKind::Tag::Nijenhuis:
            return p.apply(mi, ej) + p.apply(ei, mj) - m * p.basis_product(i, j);
          case OperatorKind::Tag::Reynolds:
            return p.apply(mi, ej) + p.apply(ei, mj) - p.apply(mi, mj);
          case OperatorKind::Tag::Averaging:
          case OperatorKind::Tag::Centroid: return p.apply(mi, ej);
        }
        throw Error("unknown operator kind");
      }));
    }
    switch (a.kind()) {
      case AlgebraKind::Associative: return Algebra::associative(std::move(derived[0]), a.basis_names());
      case AlgebraKind::Leibniz: return Algebra::leibniz(std::move(derived[0]), a.basis_names());
      case AlgebraKind::Triassociative:
        return Algebra::triassociative(std::move(derived[0]), std::move(derived[1]),
                                       std::move(derived[2]), a.basis_names());
      default: break;
    }
    throw Error("unknown algebra kind");
  }

  const TernaryTensor& t = a.ternary_product();
  const Rational& w = kind.weight;
  return Algebra::ternary_leibniz(
      TernaryTensor::build(dim,
                           [&](int i, int j, int k) -> Vec {
                             const Vec ei = unit_vec(dim, i), ej = unit_vec(dim, j),
                                       ek = unit_vec(dim, k);
                             const Vec mi = m.col(i), mj = m.col(j), mk = m.col(k);
                             if (kind.tag == OperatorKind::Tag::RotaBaxter) {
                               return t.apply(mi, mj, ek) + t.apply(mi, ej, mk) +
                                      t.apply(ei, mj, mk) +
                                      w * (t.apply(mi, ej, ek) + t.apply(ei, mj, ek) +
                                           t.apply(ei, ej, mk)) +
                                      w * w * t.basis_bracket(i, j, k);
                             }
                             const Vec two = t.apply(mi, mj, ek) + t.apply(mi, ej, mk) +
                                             t.apply(ei, mj, mk);
                             const Vec one = t.apply(mi, ej, ek) + t.apply(ei, ej, mk) +
                                             t.apply(ei, mj, ek);
                             return two - m * one + m * (m * t.basis_bracket(i, j, k));
                           }),
      a.basis_names());
}

bool rb_iterated_vs_ternary(const Algebra& l, const Mat& r, const Rational& weight) {
  if (l.kind() != AlgebraKind::Leibniz)
    throw Error("iterated-bracket comparison requires a leibniz algebra");
  if (!check_structure(l).empty())
    throw Error("iterated-bracket comparison: the algebra fails its structure check");
  const OperatorKind rb = OperatorKind::rota_baxter(weight);
  if (!check_operator(l, r, rb).empty())
    throw Error("iterated-bracket comparison: the map fails the " + rb.str() + " check");

  const Algebra iterated = t_from_leibniz(derive_from_operator(l, r, rb));
  const Algebra direct = derive_from_operator(t_from_leibniz(l), r, rb);
  return iterated == direct;
}

std::vector<Mat> search_operators(const Algebra& a, const OperatorKind& kind,
                                  const std::vector<Rational>& grid) {
  if (grid.empty()) throw Error("operator search: empty grid");
  const int dim = a.dim();
  const std::size_t cells = static_cast<std::size_t>(dim) * dim;
  std::vector<Mat> found;

  std::vector<std::size_t> odometer(cells, 0);
  while (true) {
    Mat m(dim, dim);
    for (std::size_t c = 0; c < cells; ++c)
      m(static_cast<Index>(c) / dim, static_cast<Index>(c) % dim) = grid[odometer[c]];
    if (check_operator(a, m, kind).empty()) found.push_back(std::move(m));

    std::size_t pos = cells;
    while (pos > 0) {
      --pos;
      if (++odometer[pos] < grid.size()) break;
      odometer[pos] = 0;
      if (pos == 0) return found;
    }
    if (cells == 0) return found;  // dim 0: single empty matrix already tried
  }
}

}  // namespace trialab
