#include "trialab/actions.hpp"

#include "trialab/error.hpp"

namespace trialab {

std::size_t cross_tensor_count(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::Leibniz: return 2;
    case AlgebraKind::Triassociative: return 6;
    case AlgebraKind::TernaryLeibniz: return 6;
    case AlgebraKind::Associative: break;
  }
  throw Error("actions are defined for leibniz, triassociative and ternary-leibniz kinds");
}

std::vector<std::pair<int, std::array<SlotSpace, 3>>> cross_tensor_shapes(AlgebraKind kind) {
  using S = SlotSpace;
  switch (kind) {
    case AlgebraKind::Leibniz:
      return {{2, {S::Acted, S::Acting, S::Acted}}, {2, {S::Acting, S::Acted, S::Acted}}};
    case AlgebraKind::Triassociative:
      return {{2, {S::Acted, S::Acting, S::Acted}}, {2, {S::Acted, S::Acting, S::Acted}},
              {2, {S::Acted, S::Acting, S::Acted}}, {2, {S::Acting, S::Acted, S::Acted}},
              {2, {S::Acting, S::Acted, S::Acted}}, {2, {S::Acting, S::Acted, S::Acted}}};
    case AlgebraKind::TernaryLeibniz:
      return {{3, {S::Acted, S::Acting, S::Acting}}, {3, {S::Acting, S::Acted, S::Acting}},
              {3, {S::Acting, S::Acting, S::Acted}}, {3, {S::Acting, S::Acted, S::Acted}},
              {3, {S::Acted, S::Acting, S::Acted}}, {3, {S::Acted, S::Acted, S::Acting}}};
    case AlgebraKind::Associative: break;
  }
  throw Error("actions are defined for leibniz, triassociative and ternary-leibniz kinds");
}

const std::vector<std::string>& cross_tensor_names(AlgebraKind kind) {
  static const std::vector<std::string> kLeibniz{"mu1", "mu2"};
  static const std::vector<std::string> kTri{"μ1_left", "μ1_mid", "μ1_right",
                                             "μ2_left", "μ2_mid", "μ2_right"};
  static const std::vector<std::string> kTernary{"m1", "m2", "m3", "mp1", "mp2", "mp3"};
  switch (kind) {
    case AlgebraKind::Leibniz: return kLeibniz;
    case AlgebraKind::Triassociative: return kTri;
    case AlgebraKind::TernaryLeibniz: return kTernary;
    case AlgebraKind::Associative: break;
  }
  throw Error("actions are defined for leibniz, triassociative and ternary-leibniz kinds");
}

Action::Action(Algebra acting, Algebra acted, std::vector<CrossTensor> cross)
    : acting_(std::move(acting)), acted_(std::move(acted)), cross_(std::move(cross)) {
  if (acting_.kind() != acted_.kind()) throw Error("action: acting and acted kinds differ");
  const auto shapes = cross_tensor_shapes(acting_.kind());
  if (cross_.size() != shapes.size())
    throw Error("action: wrong number of cross tensors for the kind");
  for (std::size_t i = 0; i < cross_.size(); ++i) {
    const CrossTensor& t = cross_[i];
    if (t.arity() != shapes[i].first || t.layout() != shapes[i].second)
      throw Error("action: cross tensor " + cross_tensor_names(acting_.kind())[i] +
                  " has the wrong slot layout");
    if (t.acted_dim() != acted_.dim() || t.acting_dim() != acting_.dim())
      throw Error("action: cross tensor " + cross_tensor_names(acting_.kind())[i] +
                  " dimensions do not match the algebras");
  }
}

const CrossTensor& Action::cross_at(std::size_t i) const {
  if (kind() != AlgebraKind::TernaryLeibniz)
    throw Error("ternary cross tensor requested on a binary kind");
  return cross_[i];
}

const CrossTensor& Action::mu1(Slot slot) const {
  if (kind() == AlgebraKind::Leibniz) return cross_[0];
  if (kind() == AlgebraKind::Triassociative) {
    if (slot == Slot::Left) return cross_[0];
    if (slot == Slot::Middle) return cross_[1];
    if (slot == Slot::Right) return cross_[2];
  }
  throw Error("mu1: invalid slot for the action kind");
}

const CrossTensor& Action::mu2(Slot slot) const {
  if (kind() == AlgebraKind::Leibniz) return cross_[1];
  if (kind() == AlgebraKind::Triassociative) {
    if (slot == Slot::Left) return cross_[3];
    if (slot == Slot::Middle) return cross_[4];
    if (slot == Slot::Right) return cross_[5];
  }
  throw Error("mu2: invalid slot for the action kind");
}

bool operator==(const Action& a, const Action& b) {
  if (!(a.acting_ == b.acting_) || !(a.acted_ == b.acted_)) return false;
  if (a.cross_.size() != b.cross_.size()) return false;
  for (std::size_t i = 0; i < a.cross_.size(); ++i)
    if (!(a.cross_[i] == b.cross_[i])) return false;
  return true;
}

Action trivial_action(const Algebra& acting, const Algebra& acted) {
  std::vector<CrossTensor> cross;
  for (const auto& [arity, layout] : cross_tensor_shapes(acting.kind()))
    cross.emplace_back(arity, layout, acted.dim(), acting.dim());
  return Action(acting, acted, std::move(cross));
}

Action structure_self_action(const Algebra& a) {
  const int dim = a.dim();
  std::vector<CrossTensor> cross;
  const auto shapes = cross_tensor_shapes(a.kind());
  if (is_binary_kind(a.kind())) {
    std::vector<Slot> slots = a.slots();
    const std::size_t half = shapes.size() / 2;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      const Slot slot = slots[i % half];
      cross.push_back(CrossTensor::build(2, shapes[i].second, dim, dim,
                                         [&](const std::array<int, 3>& idx) {
                                           return a.product(slot).basis_product(idx[0], idx[1]);
                                         }));
    }
  } else {
    for (const auto& [arity, layout] : shapes)
      cross.push_back(CrossTensor::build(arity, layout, dim, dim,
                                         [&](const std::array<int, 3>& idx) {
                                           return a.ternary_product().basis_bracket(idx[0], idx[1],
                                                                                    idx[2]);
                                         }));
  }
  return Action(a, a, std::move(cross));
}

Algebra restrict_to_subalgebra(const Algebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim())
    throw Error("restriction: subspace ambient dimension does not match the algebra");
  const int rdim = static_cast<int>(s.dim());
  const auto member = [&](int r) { return Vec(s.basis().row(r).transpose()); };
  const auto coords = [&](const Vec& v) {
    if (!s.contains(v)) throw Error("restriction: products leave the subspace");
    return s.coordinates(v);
  };

  switch (a.kind()) {
    case AlgebraKind::Associative:
      return Algebra::associative(BinaryTensor::build(rdim, [&](int p, int q) {
        return coords(a.evaluate(Slot::Bracket, member(p), member(q)));
      }));
    case AlgebraKind::Leibniz:
      return Algebra::leibniz(BinaryTensor::build(rdim, [&](int p, int q) {
        return coords(a.evaluate(Slot::Bracket, member(p), member(q)));
      }));
    case AlgebraKind::Triassociative: {
      std::vector<BinaryTensor> tensors;
      for (Slot slot : a.slots())
        tensors.push_back(BinaryTensor::build(
            rdim, [&](int p, int q) { return coords(a.evaluate(slot, member(p), member(q))); }));
      return Algebra::triassociative(std::move(tensors[0]), std::move(tensors[1]),
                                     std::move(tensors[2]));
    }
    case AlgebraKind::TernaryLeibniz:
      return Algebra::ternary_leibniz(TernaryTensor::build(rdim, [&](int p, int q, int r) {
        return coords(a.evaluate(member(p), member(q), member(r)));
      }));
  }
  throw Error("unknown algebra kind");
}

Action action_on_ideal(const Algebra& a, const Subspace& ideal) {
  if (!ideal_check(ideal, a, canonical_ideal_side(a.kind())))
    throw Error("ideal action: the subspace is not an ideal of the required sidedness");

  const Algebra restricted = restrict_to_subalgebra(a, ideal);
  const int dim = a.dim();
  const auto member = [&](int r) { return Vec(ideal.basis().row(r).transpose()); };
  const auto coords = [&](const Vec& v) { return ideal.coordinates(v); };
  const auto pick = [&](SlotSpace space, int idx) {
    return space == SlotSpace::Acted ? member(idx) : unit_vec(dim, idx);
  };

  std::vector<CrossTensor> cross;
  const auto shapes = cross_tensor_shapes(a.kind());
  if (is_binary_kind(a.kind())) {
    std::vector<Slot> slots = a.slots();
    const std::size_t half = shapes.size() / 2;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      const Slot slot = slots[i % half];
      const auto layout = shapes[i].second;
      cross.push_back(CrossTensor::build(
          2, layout, restricted.dim(), dim, [&](const std::array<int, 3>& idx) {
            return coords(a.evaluate(slot, pick(layout[0], idx[0]), pick(layout[1], idx[1])));
          }));
    }
  } else {
    for (const auto& [arity, layout] : shapes)
      cross.push_back(CrossTensor::build(
          arity, layout, restricted.dim(), dim, [&](const std::array<int, 3>& idx) {
            return coords(a.evaluate(pick(layout[0], idx[0]), pick(layout[1], idx[1]),
                                     pick(layout[2], idx[2])));
          }));
  }
  return Action(a, restricted, std::move(cross));
}

Algebra semidirect(const Action& act) {
  const int na = act.acted().dim(), nb = act.acting().dim();
  const int dim = na + nb;
  const Algebra& acted = act.acted();
  const Algebra& acting = act.acting();

  // Embeddings of the two summands: acted coordinates first.
  const auto embed_acted = [&](const Vec& v) {
    Vec out = Vec::Zero(dim);
    out.head(na) = v;
    return out;
  };
  const auto embed_acting = [&](const Vec& v) {
    Vec out = Vec::Zero(dim);
    out.tail(nb) = v;
    return out;
  };

  if (is_binary_kind(act.kind())) {
    std::vector<BinaryTensor> tensors;
    for (Slot slot : acted.slots()) {
      tensors.push_back(BinaryTensor::build(dim, [&](int i, int j) -> Vec {
        const bool i_acted = i < na, j_acted = j < na;
        if (i_acted && j_acted)
          return embed_acted(acted.product(slot).basis_product(i, j));
        if (!i_acted && !j_acted)
          return embed_acting(acting.product(slot).basis_product(i - na, j - na));
        if (i_acted) return embed_acted(act.mu1(slot).basis_value(i, j - na));
        return embed_acted(act.mu2(slot).basis_value(i - na, j));
      }));
    }
    if (act.kind() == AlgebraKind::Leibniz) return Algebra::leibniz(std::move(tensors[0]));
    return Algebra::triassociative(std::move(tensors[0]), std::move(tensors[1]),
                                   std::move(tensors[2]));
  }

  return Algebra::ternary_leibniz(TernaryTensor::build(dim, [&](int i, int j, int k) -> Vec {
    const bool ia = i < na, ja = j < na, ka = k < na;
    if (ia && ja && ka) return embed_acted(acted.ternary_product().basis_bracket(i, j, k));
    if (!ia && !ja && !ka)
      return embed_acting(acting.ternary_product().basis_bracket(i - na, j - na, k - na));
    if (ia && !ja && !ka) return embed_acted(act.m1().basis_value(i, j - na, k - na));
    if (!ia && ja && !ka) return embed_acted(act.m2().basis_value(i - na, j, k - na));
    if (!ia && !ja && ka) return embed_acted(act.m3().basis_value(i - na, j - na, k));
    if (!ia && ja && ka) return embed_acted(act.mp1().basis_value(i - na, j, k));
    if (ia && !ja && ka) return embed_acted(act.mp2().basis_value(i, j - na, k));
    return embed_acted(act.mp3().basis_value(i, j, k - na));
  }));
}

ViolationReport check_action(const Action& act) {
  const int na = act.acted().dim();
  const Algebra sum = semidirect(act);
  ViolationReport all = check_structure(sum);

  ViolationReport mixed;
  for (const Violation& v : all) {
    bool has_acted = false, has_acting = false;
    for (int idx : v.witness) (idx < na ? has_acted : has_acting) = true;
    if (has_acted && has_acting) mixed.add(v);
  }
  mixed.sort();
  return mixed;
}

}  // namespace trialab
