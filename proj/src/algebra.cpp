#include "trialab/algebra.hpp"

#include <array>

#include "trialab/error.hpp"
#include "trialab/parallel.hpp"

namespace trialab {

std::string_view to_string(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::Associative: return "associative";
    case AlgebraKind::Triassociative: return "triassociative";
    case AlgebraKind::Leibniz: return "leibniz";
    case AlgebraKind::TernaryLeibniz: return "ternary-leibniz";
  }
  throw Error("unknown algebra kind");
}

std::string_view to_string(Slot slot) {
  switch (slot) {
    case Slot::Left: return "left";
    case Slot::Middle: return "middle";
    case Slot::Right: return "right";
    case Slot::Bracket: return "bracket";
    case Slot::Bracket3: return "bracket3";
  }
  throw Error("unknown product slot");
}

AlgebraKind algebra_kind_from_string(std::string_view s) {
  if (s == "associative") return AlgebraKind::Associative;
  if (s == "triassociative") return AlgebraKind::Triassociative;
  if (s == "leibniz") return AlgebraKind::Leibniz;
  if (s == "ternary-leibniz") return AlgebraKind::TernaryLeibniz;
  throw Error("unknown algebra kind '" + std::string(s) + "'");
}

bool is_binary_kind(AlgebraKind kind) { return kind != AlgebraKind::TernaryLeibniz; }

std::vector<std::string> default_basis_names(int dim) {
  std::vector<std::string> names;
  names.reserve(dim);
  for (int i = 1; i <= dim; ++i) names.push_back("e" + std::to_string(i));
  return names;
}

namespace {

std::vector<std::string> resolve_names(int dim, std::vector<std::string> names) {
  if (names.empty()) return default_basis_names(dim);
  if (static_cast<int>(names.size()) != dim)
    throw Error("basis name list length does not match dimension");
  return names;
}

}  // namespace

Algebra Algebra::associative(BinaryTensor product, std::vector<std::string> basis_names) {
  Algebra a;
  a.kind_ = AlgebraKind::Associative;
  a.dim_ = product.dim();
  a.basis_names_ = resolve_names(a.dim_, std::move(basis_names));
  a.binary_ = {std::move(product)};
  return a;
}

Algebra Algebra::leibniz(BinaryTensor bracket, std::vector<std::string> basis_names) {
  Algebra a;
  a.kind_ = AlgebraKind::Leibniz;
  a.dim_ = bracket.dim();
  a.basis_names_ = resolve_names(a.dim_, std::move(basis_names));
  a.binary_ = {std::move(bracket)};
  return a;
}

Algebra Algebra::triassociative(BinaryTensor left, BinaryTensor middle, BinaryTensor right,
                                std::vector<std::string> basis_names) {
  if (left.dim() != middle.dim() || left.dim() != right.dim())
    throw Error("triassociative products must share one dimension");
  Algebra a;
  a.kind_ = AlgebraKind::Triassociative;
  a.dim_ = left.dim();
  a.basis_names_ = resolve_names(a.dim_, std::move(basis_names));
  a.binary_ = {std::move(left), std::move(middle), std::move(right)};
  return a;
}

Algebra Algebra::ternary_leibniz(TernaryTensor bracket, std::vector<std::string> basis_names) {
  Algebra a;
  a.kind_ = AlgebraKind::TernaryLeibniz;
  a.dim_ = bracket.dim();
  a.basis_names_ = resolve_names(a.dim_, std::move(basis_names));
  a.ternary_ = std::move(bracket);
  return a;
}

Algebra Algebra::zero(AlgebraKind kind, int dim) {
  switch (kind) {
    case AlgebraKind::Associative: return associative(BinaryTensor(dim));
    case AlgebraKind::Leibniz: return leibniz(BinaryTensor(dim));
    case AlgebraKind::Triassociative:
      return triassociative(BinaryTensor(dim), BinaryTensor(dim), BinaryTensor(dim));
    case AlgebraKind::TernaryLeibniz: return ternary_leibniz(TernaryTensor(dim));
  }
  throw Error("unknown algebra kind");
}

bool Algebra::has_default_basis_names() const { return basis_names_ == default_basis_names(dim_); }

const std::vector<Slot>& Algebra::slots() const {
  static const std::vector<Slot> kTri{Slot::Left, Slot::Middle, Slot::Right};
  static const std::vector<Slot> kBinary{Slot::Bracket};
  static const std::vector<Slot> kTernary{Slot::Bracket3};
  switch (kind_) {
    case AlgebraKind::Triassociative: return kTri;
    case AlgebraKind::Associative:
    case AlgebraKind::Leibniz: return kBinary;
    case AlgebraKind::TernaryLeibniz: return kTernary;
  }
  throw Error("unknown algebra kind");
}

const BinaryTensor& Algebra::product(Slot slot) const {
  switch (kind_) {
    case AlgebraKind::Triassociative:
      if (slot == Slot::Left) return binary_[0];
      if (slot == Slot::Middle) return binary_[1];
      if (slot == Slot::Right) return binary_[2];
      break;
    case AlgebraKind::Associative:
    case AlgebraKind::Leibniz:
      if (slot == Slot::Bracket) return binary_[0];
      break;
    case AlgebraKind::TernaryLeibniz: break;
  }
  throw Error("product slot '" + std::string(to_string(slot)) + "' is not valid for kind '" +
              std::string(to_string(kind_)) + "'");
}

const TernaryTensor& Algebra::ternary_product() const {
  if (kind_ != AlgebraKind::TernaryLeibniz)
    throw Error("ternary product requested on a binary kind");
  return ternary_;
}

Vec Algebra::evaluate(Slot slot, const Vec& x, const Vec& y) const {
  return product(slot).apply(x, y);
}

Vec Algebra::evaluate(const Vec& x, const Vec& y, const Vec& z) const {
  return ternary_product().apply(x, y, z);
}

bool operator==(const Algebra& a, const Algebra& b) {
  if (a.kind_ != b.kind_ || a.dim_ != b.dim_) return false;
  if (a.binary_.size() != b.binary_.size()) return false;
  for (std::size_t i = 0; i < a.binary_.size(); ++i)
    if (!(a.binary_[i] == b.binary_[i])) return false;
  return a.ternary_ == b.ternary_;
}

namespace {

// One associativity-shaped axiom (x *B y) *A z = x *C (y *D z).
struct BinaryAxiom {
  const char* id;
  Slot outer_lhs, inner_lhs, outer_rhs, inner_rhs;
};

const std::array<BinaryAxiom, 11>& triassociative_axioms() {
  static const std::array<BinaryAxiom, 11> kAxioms = {{
      {"tri-(1)", Slot::Left, Slot::Left, Slot::Left, Slot::Left},
      {"tri-(2)", Slot::Right, Slot::Right, Slot::Right, Slot::Right},
      {"tri-(3)", Slot::Middle, Slot::Middle, Slot::Middle, Slot::Middle},
      {"tri-(4)", Slot::Left, Slot::Left, Slot::Left, Slot::Right},
      {"tri-(5)", Slot::Left, Slot::Left, Slot::Left, Slot::Middle},
      {"tri-(6)", Slot::Left, Slot::Right, Slot::Right, Slot::Left},
      {"tri-(7)", Slot::Right, Slot::Left, Slot::Right, Slot::Right},
      {"tri-(8)", Slot::Right, Slot::Middle, Slot::Right, Slot::Right},
      {"tri-(9)", Slot::Left, Slot::Middle, Slot::Middle, Slot::Left},
      {"tri-(10)", Slot::Middle, Slot::Left, Slot::Middle, Slot::Right},
      {"tri-(11)", Slot::Middle, Slot::Right, Slot::Right, Slot::Middle},
  }};
  return kAxioms;
}

std::vector<Vec> basis_vectors(int dim) {
  std::vector<Vec> units;
  units.reserve(dim);
  for (int i = 0; i < dim; ++i) units.push_back(unit_vec(dim, i));
  return units;
}

ViolationReport check_binary_tuples(const Algebra& a,
                                    const std::vector<BinaryAxiom>& axioms) {
  const int dim = a.dim();
  const std::vector<Vec> u = basis_vectors(dim);
  const std::size_t total = static_cast<std::size_t>(dim) * dim * dim;

  std::vector<ViolationReport> parts(chunk_count(total));
  parallel_chunks(total, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    ViolationReport& local = parts[chunk];
    for (std::size_t n = begin; n < end; ++n) {
      const int x = static_cast<int>(n / (dim * dim));
      const int y = static_cast<int>((n / dim) % dim);
      const int z = static_cast<int>(n % dim);
      for (const BinaryAxiom& ax : axioms) {
        const Vec lhs = a.evaluate(ax.outer_lhs, a.product(ax.inner_lhs).basis_product(x, y), u[z]);
        const Vec rhs = a.evaluate(ax.outer_rhs, u[x], a.product(ax.inner_rhs).basis_product(y, z));
        const Vec diff = lhs - rhs;
        if (!is_zero(diff)) local.add(ax.id, {x, y, z}, diff);
      }
    }
  });

  ViolationReport report;
  for (auto& part : parts) report.merge(std::move(part));
  report.sort();
  return report;
}

ViolationReport check_leibniz(const Algebra& a) {
  const int dim = a.dim();
  const BinaryTensor& br = a.product(Slot::Bracket);
  const std::vector<Vec> u = basis_vectors(dim);
  const std::size_t total = static_cast<std::size_t>(dim) * dim * dim;

  std::vector<ViolationReport> parts(chunk_count(total));
  parallel_chunks(total, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    ViolationReport& local = parts[chunk];
    for (std::size_t n = begin; n < end; ++n) {
      const int x = static_cast<int>(n / (dim * dim));
      const int y = static_cast<int>((n / dim) % dim);
      const int z = static_cast<int>(n % dim);
      // [[x,y],z] = [x,[y,z]] + [[x,z],y]
      const Vec lhs = br.apply(br.basis_product(x, y), u[z]);
      const Vec rhs =
          br.apply(u[x], br.basis_product(y, z)) + br.apply(br.basis_product(x, z), u[y]);
      const Vec diff = lhs - rhs;
      if (!is_zero(diff)) local.add("leibniz", {x, y, z}, diff);
    }
  });

  ViolationReport report;
  for (auto& part : parts) report.merge(std::move(part));
  report.sort();
  return report;
}

ViolationReport check_ternary(const Algebra& a, bool left_orientation) {
  const int dim = a.dim();
  const TernaryTensor& br = a.ternary_product();
  const std::vector<Vec> u = basis_vectors(dim);
  const std::size_t d = static_cast<std::size_t>(dim);
  const std::size_t total = d * d * d * d * d;

  std::vector<ViolationReport> parts(chunk_count(total));
  parallel_chunks(total, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    ViolationReport& local = parts[chunk];
    for (std::size_t n = begin; n < end; ++n) {
      std::size_t rest = n;
      const int v = static_cast<int>(rest % d); rest /= d;
      const int t = static_cast<int>(rest % d); rest /= d;
      const int z = static_cast<int>(rest % d); rest /= d;
      const int y = static_cast<int>(rest % d); rest /= d;
      const int x = static_cast<int>(rest);
      Vec lhs, rhs;
      if (!left_orientation) {
        // [[x,y,z],t,v] = [x,y,[z,t,v]] + [x,[y,t,v],z] + [[x,t,v],y,z]
        lhs = br.apply(br.basis_bracket(x, y, z), u[t], u[v]);
        rhs = br.apply(u[x], u[y], br.basis_bracket(z, t, v)) +
              br.apply(u[x], br.basis_bracket(y, t, v), u[z]) +
              br.apply(br.basis_bracket(x, t, v), u[y], u[z]);
      } else {
        // {x,y,{z,t,v}} = {{x,y,z},t,v} + {z,{x,y,t},v} + {z,t,{x,y,v}}
        lhs = br.apply(u[x], u[y], br.basis_bracket(z, t, v));
        rhs = br.apply(br.basis_bracket(x, y, z), u[t], u[v]) +
              br.apply(u[z], br.basis_bracket(x, y, t), u[v]) +
              br.apply(u[z], u[t], br.basis_bracket(x, y, v));
      }
      const Vec diff = lhs - rhs;
      if (!is_zero(diff))
        local.add(left_orientation ? "ternary-leibniz-left" : "ternary-leibniz", {x, y, z, t, v},
                  diff);
    }
  });

  ViolationReport report;
  for (auto& part : parts) report.merge(std::move(part));
  report.sort();
  return report;
}

}  // namespace

ViolationReport check_structure(const Algebra& a) {
  switch (a.kind()) {
    case AlgebraKind::Associative:
      return check_binary_tuples(
          a, {{"assoc", Slot::Bracket, Slot::Bracket, Slot::Bracket, Slot::Bracket}});
    case AlgebraKind::Triassociative: {
      const auto& axioms = triassociative_axioms();
      return check_binary_tuples(a, {axioms.begin(), axioms.end()});
    }
    case AlgebraKind::Leibniz: return check_leibniz(a);
    case AlgebraKind::TernaryLeibniz: return check_ternary(a, /*left_orientation=*/false);
  }
  throw Error("unknown algebra kind");
}

ViolationReport check_left_ternary_structure(const Algebra& a) {
  if (a.kind() != AlgebraKind::TernaryLeibniz)
    throw Error("left ternary identity check requires a ternary-leibniz algebra");
  return check_ternary(a, /*left_orientation=*/true);
}

ViolationReport check_morphism(const Mat& f, const Algebra& src, const Algebra& dst) {
  if (src.kind() != dst.kind()) throw Error("morphism check: source and target kinds differ");
  if (f.rows() != dst.dim() || f.cols() != src.dim())
    throw Error("morphism check: matrix shape does not match the two dimensions");

  const int dim = src.dim();
  ViolationReport report;
  if (is_binary_kind(src.kind())) {
    for (Slot slot : src.slots()) {
      const BinaryTensor& p = src.product(slot);
      const BinaryTensor& q = dst.product(slot);
      for (int x = 0; x < dim; ++x)
        for (int y = 0; y < dim; ++y) {
          const Vec lhs = f * p.basis_product(x, y);
          const Vec rhs = q.apply(f.col(x), f.col(y));
          const Vec diff = lhs - rhs;
          if (!is_zero(diff))
            report.add("morphism-" + std::string(to_string(slot)), {x, y}, diff);
        }
    }
  } else {
    const TernaryTensor& p = src.ternary_product();
    const TernaryTensor& q = dst.ternary_product();
    for (int x = 0; x < dim; ++x)
      for (int y = 0; y < dim; ++y)
        for (int z = 0; z < dim; ++z) {
          const Vec lhs = f * p.basis_bracket(x, y, z);
          const Vec rhs = q.apply(f.col(x), f.col(y), f.col(z));
          const Vec diff = lhs - rhs;
          if (!is_zero(diff)) report.add("morphism-bracket3", {x, y, z}, diff);
        }
  }
  report.sort();
  return report;
}

}  // namespace trialab
