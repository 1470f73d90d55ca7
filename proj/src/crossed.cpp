#include "trialab/crossed.hpp"

#include "trialab/error.hpp"
#include "trialab/functors.hpp"
#include "trialab/operators.hpp"

namespace trialab {

namespace {

void validate_phi_shape(const CrossedModule& cm) {
  if (cm.phi.rows() != cm.acting().dim() || cm.phi.cols() != cm.acted().dim())
    throw Error("crossed module: phi must map acted coordinates to acting coordinates");
}

void require_valid_action(const Action& act, const char* who) {
  if (!check_action(act).empty())
    throw Error(std::string(who) + ": the underlying action is not valid");
}

void require_valid_crossed_module(const CrossedModule& cm, const char* who) {
  if (!check_crossed_module(cm).empty())
    throw Error(std::string(who) + ": the crossed module fails its check");
}

}  // namespace

ViolationReport check_crossed_module(const CrossedModule& cm) {
  validate_phi_shape(cm);
  require_valid_action(cm.action, "crossed module check");

  const Algebra& acted = cm.acted();
  const Algebra& acting = cm.acting();
  const Mat& phi = cm.phi;
  const int nl = acted.dim(), np = acting.dim();

  ViolationReport report = check_morphism(phi, acted, acting).prefixed("phi-");

  if (is_binary_kind(cm.kind())) {
    const bool tri = cm.kind() == AlgebraKind::Triassociative;
    for (Slot slot : acted.slots()) {
      const std::string tag = tri ? "-" + std::string(to_string(slot)) : "";
      const CrossTensor& mu1 = cm.action.mu1(slot);
      const CrossTensor& mu2 = cm.action.mu2(slot);
      for (int x = 0; x < nl; ++x)
        for (int a = 0; a < np; ++a) {
          const Vec d1 = phi * mu1.basis_value(x, a) -
                         acting.product(slot).apply(phi.col(x), unit_vec(np, a));
          if (!is_zero(d1)) report.add("crm-1" + tag, {x, a}, d1);
          const Vec d2 = phi * mu2.basis_value(a, x) -
                         acting.product(slot).apply(unit_vec(np, a), phi.col(x));
          if (!is_zero(d2)) report.add("crm-2" + tag, {a, x}, d2);
        }
      for (int x = 0; x < nl; ++x)
        for (int y = 0; y < nl; ++y) {
          const Vec base = acted.product(slot).basis_product(x, y);
          const Vec d3a = mu1.apply(unit_vec(nl, x), phi.col(y)) - base;
          if (!is_zero(d3a)) report.add("crm-3a" + tag, {x, y}, d3a);
          const Vec d3b = mu2.apply(phi.col(x), unit_vec(nl, y)) - base;
          if (!is_zero(d3b)) report.add("crm-3b" + tag, {x, y}, d3b);
        }
    }
    report.sort();
    return report;
  }

  const TernaryTensor& bl = acted.ternary_product();
  const TernaryTensor& bp = acting.ternary_product();
  const auto ul = [&](int i) { return unit_vec(nl, i); };
  const auto up = [&](int i) { return unit_vec(np, i); };
  const CrossTensor &m1 = cm.action.m1(), &m2 = cm.action.m2(), &m3 = cm.action.m3();
  const CrossTensor &mp1 = cm.action.mp1(), &mp2 = cm.action.mp2(), &mp3 = cm.action.mp3();

  // Equivariance: phi carries every action map to the acting bracket.
  for (int l = 0; l < nl; ++l)
    for (int a = 0; a < np; ++a)
      for (int b = 0; b < np; ++b) {
        const Vec d1 = phi * m1.basis_value(l, a, b) - bp.apply(phi.col(l), up(a), up(b));
        if (!is_zero(d1)) report.add("cm-1-m1", {l, a, b}, d1);
        const Vec d2 = phi * m2.basis_value(a, l, b) - bp.apply(up(a), phi.col(l), up(b));
        if (!is_zero(d2)) report.add("cm-1-m2", {a, l, b}, d2);
        const Vec d3 = phi * m3.basis_value(a, b, l) - bp.apply(up(a), up(b), phi.col(l));
        if (!is_zero(d3)) report.add("cm-1-m3", {a, b, l}, d3);
      }
  for (int a = 0; a < np; ++a)
    for (int l1 = 0; l1 < nl; ++l1)
      for (int l2 = 0; l2 < nl; ++l2) {
        const Vec d1 = phi * mp1.basis_value(a, l1, l2) - bp.apply(up(a), phi.col(l1), phi.col(l2));
        if (!is_zero(d1)) report.add("cm-1-mp1", {a, l1, l2}, d1);
        const Vec d2 = phi * mp2.basis_value(l1, a, l2) - bp.apply(phi.col(l1), up(a), phi.col(l2));
        if (!is_zero(d2)) report.add("cm-1-mp2", {l1, a, l2}, d2);
        const Vec d3 = phi * mp3.basis_value(l1, l2, a) - bp.apply(phi.col(l1), phi.col(l2), up(a));
        if (!is_zero(d3)) report.add("cm-1-mp3", {l1, l2, a}, d3);
      }

  // Bracket recovery: one or two arguments pushed through phi reproduce the
  // acted bracket.
  for (int x = 0; x < nl; ++x)
    for (int y = 0; y < nl; ++y)
      for (int z = 0; z < nl; ++z) {
        const Vec base = bl.basis_bracket(x, y, z);
        const std::vector<int> w{x, y, z};
        const Vec d1 = mp1.apply(phi.col(x), ul(y), ul(z)) - base;
        if (!is_zero(d1)) report.add("cm-2-mp1", w, d1);
        const Vec d2 = mp2.apply(ul(x), phi.col(y), ul(z)) - base;
        if (!is_zero(d2)) report.add("cm-2-mp2", w, d2);
        const Vec d3 = mp3.apply(ul(x), ul(y), phi.col(z)) - base;
        if (!is_zero(d3)) report.add("cm-2-mp3", w, d3);
        const Vec d4 = m3.apply(phi.col(x), phi.col(y), ul(z)) - base;
        if (!is_zero(d4)) report.add("cm-2-m3", w, d4);
        const Vec d5 = m2.apply(phi.col(x), ul(y), phi.col(z)) - base;
        if (!is_zero(d5)) report.add("cm-2-m2", w, d5);
        const Vec d6 = m1.apply(ul(x), phi.col(y), phi.col(z)) - base;
        if (!is_zero(d6)) report.add("cm-2-m1", w, d6);
      }

  // Peiffer identities: an acted argument pushed through phi moves one map
  // family into the other.
  for (int l1 = 0; l1 < nl; ++l1)
    for (int l2 = 0; l2 < nl; ++l2)
      for (int p = 0; p < np; ++p) {
        {
          const Vec v = mp3.basis_value(l1, l2, p);
          const Vec d1 = v - m2.apply(phi.col(l1), ul(l2), up(p));
          if (!is_zero(d1)) report.add("cm-3-mp3-m2", {l1, l2, p}, d1);
          const Vec d2 = v - m1.apply(ul(l1), phi.col(l2), up(p));
          if (!is_zero(d2)) report.add("cm-3-mp3-m1", {l1, l2, p}, d2);
        }
        {
          const Vec v = mp2.basis_value(l1, p, l2);
          const Vec d1 = v - m3.apply(phi.col(l1), up(p), ul(l2));
          if (!is_zero(d1)) report.add("cm-3-mp2-m3", {l1, p, l2}, d1);
          const Vec d2 = v - m1.apply(ul(l1), up(p), phi.col(l2));
          if (!is_zero(d2)) report.add("cm-3-mp2-m1", {l1, p, l2}, d2);
        }
        {
          const Vec v = mp1.basis_value(p, l1, l2);
          const Vec d1 = v - m3.apply(up(p), phi.col(l1), ul(l2));
          if (!is_zero(d1)) report.add("cm-3-mp1-m3", {p, l1, l2}, d1);
          const Vec d2 = v - m2.apply(up(p), ul(l1), phi.col(l2));
          if (!is_zero(d2)) report.add("cm-3-mp1-m2", {p, l1, l2}, d2);
        }
      }

  report.sort();
  return report;
}

ViolationReport check_crossed_morphism(const Mat& alpha, const Mat& beta, const CrossedModule& src,
                                       const CrossedModule& dst) {
  if (src.kind() != dst.kind()) throw Error("crossed morphism: kinds differ");
  if (alpha.rows() != dst.acted().dim() || alpha.cols() != src.acted().dim())
    throw Error("crossed morphism: alpha shape does not match the acted algebras");
  if (beta.rows() != dst.acting().dim() || beta.cols() != src.acting().dim())
    throw Error("crossed morphism: beta shape does not match the acting algebras");

  ViolationReport report = check_morphism(alpha, src.acted(), dst.acted()).prefixed("alpha-");
  report.merge(check_morphism(beta, src.acting(), dst.acting()).prefixed("beta-"));

  const Mat square = dst.phi * alpha - beta * src.phi;
  for (Index j = 0; j < square.cols(); ++j) {
    const Vec col = square.col(j);
    if (!is_zero(col)) report.add("square", {static_cast<int>(j)}, col);
  }

  const auto& names = cross_tensor_names(src.kind());
  for (std::size_t t = 0; t < src.action.cross().size(); ++t) {
    const CrossTensor& s = src.action.cross()[t];
    const CrossTensor& d = dst.action.cross()[t];
    const auto map_col = [&](int slot, int idx) {
      return s.layout()[slot] == SlotSpace::Acted ? Vec(alpha.col(idx)) : Vec(beta.col(idx));
    };
    std::array<int, 3> idx{0, 0, 0};
    const int d0 = s.slot_dim(0), d1 = s.slot_dim(1), d2 = s.arity() == 3 ? s.slot_dim(2) : 1;
    for (idx[0] = 0; idx[0] < d0; ++idx[0])
      for (idx[1] = 0; idx[1] < d1; ++idx[1])
        for (idx[2] = 0; idx[2] < d2; ++idx[2]) {
          Vec lhs = s.arity() == 2 ? alpha * s.basis_value(idx[0], idx[1])
                                   : alpha * s.basis_value(idx[0], idx[1], idx[2]);
          Vec rhs = s.arity() == 2
                        ? d.apply(map_col(0, idx[0]), map_col(1, idx[1]))
                        : d.apply(map_col(0, idx[0]), map_col(1, idx[1]), map_col(2, idx[2]));
          const Vec diff = lhs - rhs;
          if (!is_zero(diff)) {
            std::vector<int> w(idx.begin(), idx.begin() + s.arity());
            report.add("cross-" + names[t], w, diff);
          }
        }
  }
  report.sort();
  return report;
}

CrossedModule crossed_from_ideal(const Algebra& a, const Subspace& ideal) {
  Action act = action_on_ideal(a, ideal);
  Mat phi(a.dim(), ideal.dim());
  for (Index p = 0; p < ideal.dim(); ++p) phi.col(p) = ideal.basis().row(p).transpose();
  return {std::move(act), std::move(phi)};
}

CrossedModule identity_crossed_module(const Algebra& a) {
  return {structure_self_action(a), Mat::Identity(a.dim(), a.dim())};
}

CrossedModuleProperties crossed_module_properties(const CrossedModule& cm) {
  require_valid_crossed_module(cm, "crossed module properties");

  const Algebra& acted = cm.acted();
  const Algebra& acting = cm.acting();
  CrossedModuleProperties props;

  const Subspace ker = kernel(cm.phi);
  const Subspace ann = annihilator(acted);
  props.kernel_in_annihilator = ann.contains(ker);

  const Subspace img = image(cm.phi);
  props.image_is_ideal = ideal_check(img, acting, canonical_ideal_side(cm.kind()));

  bool trivial = true;
  const auto ann_vec = [&](Index r) { return Vec(ann.basis().row(r).transpose()); };
  const auto img_vec = [&](Index r) { return Vec(img.basis().row(r).transpose()); };
  if (is_binary_kind(cm.kind())) {
    for (Slot slot : acted.slots())
      for (Index v = 0; v < ann.dim() && trivial; ++v)
        for (Index g = 0; g < img.dim() && trivial; ++g) {
          if (!is_zero(cm.action.mu1(slot).apply(ann_vec(v), img_vec(g)))) trivial = false;
          if (!is_zero(cm.action.mu2(slot).apply(img_vec(g), ann_vec(v)))) trivial = false;
        }
  } else {
    for (Index v = 0; v < ann.dim() && trivial; ++v)
      for (Index g1 = 0; g1 < img.dim() && trivial; ++g1)
        for (Index g2 = 0; g2 < img.dim() && trivial; ++g2) {
          if (!is_zero(cm.action.m1().apply(ann_vec(v), img_vec(g1), img_vec(g2)))) trivial = false;
          if (!is_zero(cm.action.m2().apply(img_vec(g1), ann_vec(v), img_vec(g2)))) trivial = false;
          if (!is_zero(cm.action.m3().apply(img_vec(g1), img_vec(g2), ann_vec(v)))) trivial = false;
        }
  }
  props.image_acts_trivially_on_annihilator = trivial;
  return props;
}

namespace {

// (x, a) -> (-x, phi(x) + a) on acted + acting coordinates.
Mat shift_matrix(const Mat& phi) {
  const Index n = phi.cols(), m = phi.rows();
  Mat shift = Mat::Zero(n + m, n + m);
  shift.topLeftCorner(n, n) = -Mat::Identity(n, n);
  shift.bottomLeftCorner(m, n) = phi;
  shift.bottomRightCorner(m, m) = Mat::Identity(m, m);
  return shift;
}

}  // namespace

ViolationReport shift_morphism_check(const CrossedModule& cm) {
  validate_phi_shape(cm);
  if (cm.kind() != AlgebraKind::Triassociative)
    throw Error("shift morphism check is defined for triassociative crossed modules");
  const Algebra sd = semidirect(cm.action);
  return check_morphism(shift_matrix(cm.phi), sd, sd);
}

Action induce_ternary_action_from_triassoc(const Action& act) {
  if (act.kind() != AlgebraKind::Triassociative)
    throw Error("ternary action induction requires a triassociative action");
  const Algebra ta = t_from_triassoc(act.acted());
  const Algebra tb = t_from_triassoc(act.acting());

  const Algebra& a = act.acted();
  const Algebra& b = act.acting();
  const int nl = a.dim(), np = b.dim();
  const auto ul = [&](int i) { return unit_vec(nl, i); };
  const auto ub = [&](int i) { return unit_vec(np, i); };
  const BinaryTensor& amid = a.product(Slot::Middle);
  const BinaryTensor& bmid = b.product(Slot::Middle);
  const CrossTensor& mu1l = act.mu1(Slot::Left);
  const CrossTensor& mu1m = act.mu1(Slot::Middle);
  const CrossTensor& mu1r = act.mu1(Slot::Right);
  const CrossTensor& mu2l = act.mu2(Slot::Left);
  const CrossTensor& mu2m = act.mu2(Slot::Middle);
  const CrossTensor& mu2r = act.mu2(Slot::Right);

  const auto shapes = cross_tensor_shapes(AlgebraKind::TernaryLeibniz);
  std::vector<CrossTensor> cross;
  // Each map is the mixed instance of the commutator bracket on the
  // semidirect sum: an inner middle-product commutator followed by the outer
  // left/right difference, with cross tensors standing in wherever an
  // argument comes from the other summand.
  cross.push_back(CrossTensor::build(3, shapes[0].second, nl, np,
                                     [&](const std::array<int, 3>& i) -> Vec {  // m1(x, a, b)
                                       const Vec comm =
                                           bmid.basis_product(i[1], i[2]) - bmid.basis_product(i[2], i[1]);
                                       return mu1l.apply(ul(i[0]), comm) - mu2r.apply(comm, ul(i[0]));
                                     }));
  cross.push_back(CrossTensor::build(3, shapes[1].second, nl, np,
                                     [&](const std::array<int, 3>& i) -> Vec {  // m2(a, x, b)
                                       const Vec comm = mu1m.basis_value(i[1], i[2]) -
                                                        mu2m.basis_value(i[2], i[1]);
                                       return mu2l.apply(ub(i[0]), comm) - mu1r.apply(comm, ub(i[0]));
                                     }));
  cross.push_back(CrossTensor::build(3, shapes[2].second, nl, np,
                                     [&](const std::array<int, 3>& i) -> Vec {  // m3(a, b, x)
                                       const Vec comm = mu2m.basis_value(i[1], i[2]) -
                                                        mu1m.basis_value(i[2], i[1]);
                                       return mu2l.apply(ub(i[0]), comm) - mu1r.apply(comm, ub(i[0]));
                                     }));
  cross.push_back(CrossTensor::build(3, shapes[3].second, nl, np,
                                     [&](const std::array<int, 3>& i) -> Vec {  // mp1(c, y, z)
                                       const Vec comm =
                                           amid.basis_product(i[1], i[2]) - amid.basis_product(i[2], i[1]);
                                       return mu2l.apply(ub(i[0]), comm) - mu1r.apply(comm, ub(i[0]));
                                     }));
  cross.push_back(CrossTensor::build(3, shapes[4].second, nl, np,
                                     [&](const std::array<int, 3>& i) -> Vec {  // mp2(y, c, z)
                                       const Vec comm = mu2m.basis_value(i[1], i[2]) -
                                                        mu1m.basis_value(i[2], i[1]);
                                       return a.product(Slot::Left).apply(ul(i[0]), comm) -
                                              a.product(Slot::Right).apply(comm, ul(i[0]));
                                     }));
  cross.push_back(CrossTensor::build(3, shapes[5].second, nl, np,
                                     [&](const std::array<int, 3>& i) -> Vec {  // mp3(y, z, c)
                                       const Vec comm = mu1m.basis_value(i[1], i[2]) -
                                                        mu2m.basis_value(i[2], i[1]);
                                       return a.product(Slot::Left).apply(ul(i[0]), comm) -
                                              a.product(Slot::Right).apply(comm, ul(i[0]));
                                     }));
  return Action(tb, ta, std::move(cross));
}

CrossedModule induce_ternary_cm_from_triassoc(const CrossedModule& cm) {
  if (cm.kind() != AlgebraKind::Triassociative)
    throw Error("ternary induction requires a triassociative crossed module");
  require_valid_crossed_module(cm, "ternary induction");
  return {induce_ternary_action_from_triassoc(cm.action), cm.phi};
}

Action induce_ternary_action_from_leibniz(const Action& act) {
  if (act.kind() != AlgebraKind::Leibniz)
    throw Error("ternary action induction requires a leibniz action");
  const Algebra tl = t_from_leibniz(act.acted());
  const Algebra tp = t_from_leibniz(act.acting());

  const int nl = act.acted().dim(), np = act.acting().dim();
  const auto ul = [&](int i) { return unit_vec(nl, i); };
  const auto up = [&](int i) { return unit_vec(np, i); };
  const BinaryTensor& bl = act.acted().product(Slot::Bracket);
  const BinaryTensor& bp = act.acting().product(Slot::Bracket);
  const CrossTensor& mu1 = act.mu1();
  const CrossTensor& mu2 = act.mu2();

  const auto shapes = cross_tensor_shapes(AlgebraKind::TernaryLeibniz);
  std::vector<CrossTensor> cross;
  // Mixed instances of the nested bracket {x,y,z} = [x,[y,z]] on the
  // semidirect sum.
  cross.push_back(CrossTensor::build(3, shapes[0].second, nl, np,
                                     [&](const std::array<int, 3>& i) -> Vec {  // m1(l, p1, p2)
                                       return mu1.apply(ul(i[0]), bp.basis_product(i[1], i[2]));
                                     }));
  cross.push_back(CrossTensor::build(3, shapes[1].second, nl, np,
                                     [&](const std::array<int, 3>& i) -> Vec {  // m2(p1, l, p2)
                                       return mu2.apply(up(i[0]), mu1.basis_value(i[1], i[2]));
                                     }));
  cross.push_back(CrossTensor::build(3, shapes[2].second, nl, np,
                                     [&](const std::array<int, 3>& i) -> Vec {  // m3(p1, p2, l)
                                       return mu2.apply(up(i[0]), mu2.basis_value(i[1], i[2]));
                                     }));
  cross.push_back(CrossTensor::build(3, shapes[3].second, nl, np,
                                     [&](const std::array<int, 3>& i) -> Vec {  // mp1(p, l1, l2)
                                       return mu2.apply(up(i[0]), bl.basis_product(i[1], i[2]));
                                     }));
  cross.push_back(CrossTensor::build(3, shapes[4].second, nl, np,
                                     [&](const std::array<int, 3>& i) -> Vec {  // mp2(l1, p, l2)
                                       return bl.apply(ul(i[0]), mu2.basis_value(i[1], i[2]));
                                     }));
  cross.push_back(CrossTensor::build(3, shapes[5].second, nl, np,
                                     [&](const std::array<int, 3>& i) -> Vec {  // mp3(l1, l2, p)
                                       return bl.apply(ul(i[0]), mu1.basis_value(i[1], i[2]));
                                     }));
  return Action(tp, tl, std::move(cross));
}

CrossedModule induce_ternary_cm_from_leibniz(const CrossedModule& cm) {
  if (cm.kind() != AlgebraKind::Leibniz)
    throw Error("ternary induction requires a leibniz crossed module");
  require_valid_crossed_module(cm, "ternary induction");
  return {induce_ternary_action_from_leibniz(cm.action), cm.phi};
}

std::pair<CrossedModule, CrossedModule> rb_twist_leibniz_cm(const CrossedModule& cm,
                                                            const Mat& r_acted, const Mat& r_acting,
                                                            const Rational& weight) {
  if (cm.kind() != AlgebraKind::Leibniz)
    throw Error("rota-baxter twist requires a leibniz crossed module");
  require_valid_crossed_module(cm, "rota-baxter twist");

  const Algebra& acted = cm.acted();
  const Algebra& acting = cm.acting();
  const int nl = acted.dim(), np = acting.dim();
  const OperatorKind rb = OperatorKind::rota_baxter(weight);
  if (!check_operator(acted, r_acted, rb).empty())
    throw Error("rota-baxter twist: the acted map fails the " + rb.str() + " check");
  if (!check_operator(acting, r_acting, rb).empty())
    throw Error("rota-baxter twist: the acting map fails the " + rb.str() + " check");

  const CrossTensor& mu1 = cm.action.mu1();
  const CrossTensor& mu2 = cm.action.mu2();
  const auto ul = [&](int i) { return unit_vec(nl, i); };
  const auto up = [&](int i) { return unit_vec(np, i); };
  const auto mu1_twisted = [&](int l, int p) {
    return Vec(mu1.apply(r_acted.col(l), up(p)) + mu1.apply(ul(l), r_acting.col(p)) +
               weight * mu1.basis_value(l, p));
  };
  const auto mu2_twisted = [&](int p, int l) {
    return Vec(mu2.apply(r_acting.col(p), ul(l)) + mu2.apply(up(p), r_acted.col(l)) +
               weight * mu2.basis_value(p, l));
  };

  for (int l = 0; l < nl; ++l)
    for (int p = 0; p < np; ++p) {
      const Vec d1 = mu1.apply(r_acted.col(l), r_acting.col(p)) - r_acted * mu1_twisted(l, p);
      if (!is_zero(d1))
        throw Error("rota-baxter twist: mu1 compatibility identity fails at basis pair (" +
                    std::to_string(l) + ", " + std::to_string(p) + ")");
      const Vec d2 = mu2.apply(r_acting.col(p), r_acted.col(l)) - r_acted * mu2_twisted(p, l);
      if (!is_zero(d2))
        throw Error("rota-baxter twist: mu2 compatibility identity fails at basis pair (" +
                    std::to_string(p) + ", " + std::to_string(l) + ")");
    }

  const Algebra acted_rb = derive_from_operator(acted, r_acted, rb);
  const Algebra acting_rb = derive_from_operator(acting, r_acting, rb);
  const auto shapes = cross_tensor_shapes(AlgebraKind::Leibniz);
  std::vector<CrossTensor> cross;
  cross.push_back(CrossTensor::build(2, shapes[0].second, nl, np,
                                     [&](const std::array<int, 3>& i) -> Vec {
                                       return mu1_twisted(i[0], i[1]);
                                     }));
  cross.push_back(CrossTensor::build(2, shapes[1].second, nl, np,
                                     [&](const std::array<int, 3>& i) -> Vec {
                                       return mu2_twisted(i[0], i[1]);
                                     }));
  CrossedModule twisted{Action(acting_rb, acted_rb, std::move(cross)), cm.phi};
  CrossedModule ternary = induce_ternary_cm_from_leibniz(twisted);
  return {std::move(twisted), std::move(ternary)};
}

CrossedModule averaging_twist_triassoc_cm(const CrossedModule& cm, const Mat& beta_acted,
                                          const Mat& beta_acting) {
  if (cm.kind() != AlgebraKind::Triassociative)
    throw Error("averaging twist requires a triassociative crossed module");
  require_valid_crossed_module(cm, "averaging twist");

  const Algebra& acted = cm.acted();
  const Algebra& acting = cm.acting();
  const OperatorKind avg = OperatorKind::averaging();
  if (!check_operator(acted, beta_acted, avg).empty())
    throw Error("averaging twist: the acted map fails the averaging check");
  if (!check_operator(acting, beta_acting, avg).empty())
    throw Error("averaging twist: the acting map fails the averaging check");
  if (kernel(beta_acted).dim() != 0 || kernel(beta_acting).dim() != 0)
    throw Error("averaging twist: both maps must be injective");
  if (!mat_equal(cm.phi * beta_acted, beta_acting * cm.phi))
    throw Error("averaging twist: the maps do not commute with phi");

  const Algebra acted_avg = derive_from_operator(acted, beta_acted, avg);
  const Algebra acting_avg = derive_from_operator(acting, beta_acting, avg);

  const int nl = acted.dim(), np = acting.dim();
  const auto shapes = cross_tensor_shapes(AlgebraKind::Triassociative);
  std::vector<CrossTensor> cross;
  for (std::size_t t = 0; t < shapes.size(); ++t) {
    const bool is_mu1 = t < 3;
    const Slot slot = acted.slots()[t % 3];
    cross.push_back(CrossTensor::build(
        2, shapes[t].second, nl, np, [&](const std::array<int, 3>& i) -> Vec {
          if (is_mu1)  // mu1_beta(x, a) = mu1(beta x, a)
            return cm.action.mu1(slot).apply(beta_acted.col(i[0]), unit_vec(np, i[1]));
          // mu2_beta(a, x) = mu2(a, beta x)
          return cm.action.mu2(slot).apply(unit_vec(np, i[0]), beta_acted.col(i[1]));
        }));
  }
  return {Action(acting_avg, acted_avg, std::move(cross)), cm.phi};
}

Action rb_twist_ternary_action(const Action& act, const Mat& r_acted, const Mat& r_acting) {
  if (act.kind() != AlgebraKind::TernaryLeibniz)
    throw Error("rota-baxter action twist requires a ternary-leibniz action");
  const OperatorKind rb0 = OperatorKind::rota_baxter(0);
  if (!check_operator(act.acted(), r_acted, rb0).empty())
    throw Error("rota-baxter action twist: the acted map fails the weight-0 check");
  if (!check_operator(act.acting(), r_acting, rb0).empty())
    throw Error("rota-baxter action twist: the acting map fails the weight-0 check");

  const int nl = act.acted().dim(), np = act.acting().dim();
  const auto r_col = [&](SlotSpace space, int idx) {
    return space == SlotSpace::Acted ? Vec(r_acted.col(idx)) : Vec(r_acting.col(idx));
  };
  const auto plain = [&](SlotSpace space, int idx) {
    return space == SlotSpace::Acted ? unit_vec(nl, idx) : unit_vec(np, idx);
  };
  // Sum of the three applications with the map dropped from one slot each.
  const auto twisted = [&](const CrossTensor& t, const std::array<int, 3>& i) {
    const auto& lay = t.layout();
    return Vec(t.apply(r_col(lay[0], i[0]), r_col(lay[1], i[1]), plain(lay[2], i[2])) +
               t.apply(plain(lay[0], i[0]), r_col(lay[1], i[1]), r_col(lay[2], i[2])) +
               t.apply(r_col(lay[0], i[0]), plain(lay[1], i[1]), r_col(lay[2], i[2])));
  };

  // Identity order: the two-acted-argument maps
  // first, then the one-acted-argument maps.
  const std::array<std::size_t, 6> order{3, 4, 5, 0, 1, 2};
  for (std::size_t n = 0; n < order.size(); ++n) {
    const CrossTensor& t = act.cross()[order[n]];
    const auto& lay = t.layout();
    std::array<int, 3> i{0, 0, 0};
    for (i[0] = 0; i[0] < t.slot_dim(0); ++i[0])
      for (i[1] = 0; i[1] < t.slot_dim(1); ++i[1])
        for (i[2] = 0; i[2] < t.slot_dim(2); ++i[2]) {
          const Vec lhs = t.apply(r_col(lay[0], i[0]), r_col(lay[1], i[1]), r_col(lay[2], i[2]));
          const Vec diff = lhs - r_acted * twisted(t, i);
          if (!is_zero(diff))
            throw Error("rota-baxter action identity rb-action-" + std::to_string(n + 1) +
                        " fails at basis triple (" + std::to_string(i[0]) + ", " +
                        std::to_string(i[1]) + ", " + std::to_string(i[2]) + ")");
        }
  }

  const Algebra acted_rb = derive_from_operator(act.acted(), r_acted, rb0);
  const Algebra acting_rb = derive_from_operator(act.acting(), r_acting, rb0);
  std::vector<CrossTensor> cross;
  for (const CrossTensor& t : act.cross())
    cross.push_back(CrossTensor::build(t.arity(), t.layout(), nl, np,
                                       [&](const std::array<int, 3>& i) -> Vec { return twisted(t, i); }));
  return Action(acting_rb, acted_rb, std::move(cross));
}

bool functor_semidirect_compat(const Action& act) {
  if (act.kind() != AlgebraKind::Triassociative)
    throw Error("semidirect compatibility is defined for triassociative actions");
  require_valid_action(act, "semidirect compatibility");
  const Algebra lhs = t_from_triassoc(semidirect(act));
  const Algebra rhs = semidirect(induce_ternary_action_from_triassoc(act));
  return lhs == rhs;
}

ViolationReport semidirect_morphism_maps(const CrossedModule& cm) {
  validate_phi_shape(cm);
  if (cm.kind() != AlgebraKind::Triassociative)
    throw Error("semidirect morphism maps are defined for triassociative crossed modules");

  const Action tact = induce_ternary_action_from_triassoc(cm.action);
  const Algebra& ta = tact.acted();
  const Algebra& tb = tact.acting();
  const Algebra s1 = semidirect(tact);
  const Algebra s2 = semidirect(structure_self_action(tb));
  const Algebra s3 = semidirect(structure_self_action(ta));
  const Index n = ta.dim(), m = tb.dim();

  Mat map1 = Mat::Zero(m + m, n + m);  // (x, a) -> (phi x, a)
  map1.topLeftCorner(m, n) = cm.phi;
  map1.bottomRightCorner(m, m) = Mat::Identity(m, m);

  Mat map2 = Mat::Zero(n + m, n + n);  // (x, y) -> (x, phi y)
  map2.topLeftCorner(n, n) = Mat::Identity(n, n);
  map2.bottomRightCorner(m, n) = cm.phi;

  const Mat map3 = shift_matrix(cm.phi);  // (x, a) -> (-x, phi x + a)

  ViolationReport report = check_morphism(map1, s1, s2).prefixed("map-i:");
  report.merge(check_morphism(map2, s3, s1).prefixed("map-ii:"));
  report.merge(check_morphism(map3, s1, s1).prefixed("map-iii:"));
  report.sort();
  return report;
}

}  // namespace trialab
