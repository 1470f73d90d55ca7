#pragma once

#include "trialab/algebra.hpp"
#include "trialab/constructions.hpp"

namespace trialab {

/// An action of one algebra (the acting side) on another of the same kind
/// (the acted side), given by cross-space multilinear tensors whose outputs
/// land in the acted space.
///
/// Tensor layout per kind, in canonical order:
///   leibniz          mu1 (acted x acting), mu2 (acting x acted)
///   triassociative   mu1_left, mu1_mid, mu1_right (acted x acting),
///                    mu2_left, mu2_mid, mu2_right (acting x acted)
///   ternary-leibniz  m1 (L,P,P), m2 (P,L,P), m3 (P,P,L),
///                    mp1 (P,L,L), mp2 (L,P,L), mp3 (L,L,P)
/// where L is the acted space and P the acting space.
class Action {
 public:
  Action(Algebra acting, Algebra acted, std::vector<CrossTensor> cross);

  AlgebraKind kind() const { return acting_.kind(); }
  const Algebra& acting() const { return acting_; }
  const Algebra& acted() const { return acted_; }
  const std::vector<CrossTensor>& cross() const { return cross_; }

  // Binary-kind accessors (slot ignored for the leibniz kind).
  const CrossTensor& mu1(Slot slot = Slot::Bracket) const;
  const CrossTensor& mu2(Slot slot = Slot::Bracket) const;

  // Ternary-kind accessors.
  const CrossTensor& m1() const { return cross_at(0); }
  const CrossTensor& m2() const { return cross_at(1); }
  const CrossTensor& m3() const { return cross_at(2); }
  const CrossTensor& mp1() const { return cross_at(3); }
  const CrossTensor& mp2() const { return cross_at(4); }
  const CrossTensor& mp3() const { return cross_at(5); }

  friend bool operator==(const Action& a, const Action& b);

 private:
  const CrossTensor& cross_at(std::size_t i) const;

  Algebra acting_;
  Algebra acted_;
  std::vector<CrossTensor> cross_;
};

/// Number and shape of cross tensors the kind requires, in canonical order.
std::size_t cross_tensor_count(AlgebraKind kind);
std::vector<std::pair<int, std::array<SlotSpace, 3>>> cross_tensor_shapes(AlgebraKind kind);

/// Canonical cross tensor names, matching the JSON schema.
const std::vector<std::string>& cross_tensor_names(AlgebraKind kind);

/// All cross tensors zero: the semidirect sum collapses to the direct sum.
Action trivial_action(const Algebra& acting, const Algebra& acted);

/// An algebra acting on itself through its own products.
Action structure_self_action(const Algebra& a);

/// The products of the ambient algebra restricted to an ideal give an action
/// of the algebra on the ideal (with the ideal carrying its restricted
/// structure). Throws if the subspace is not an ideal of the kind's
/// canonical sidedness.
Action action_on_ideal(const Algebra& a, const Subspace& ideal);

/// The restricted algebra structure an ideal inherits, in the coordinates of
/// its canonical basis.
Algebra restrict_to_subalgebra(const Algebra& a, const Subspace& s);

/// Algebra structure on acted + acting: pure products on each summand and the
/// cross tensors on mixed tuples. Acted coordinates come first.
Algebra semidirect(const Action& act);

/// Builds the semidirect algebra and reports exactly the structure violations
/// whose witness mixes both summands. Provided both algebras pass their own
/// structure checks, an empty report is equivalent to the action axioms.
ViolationReport check_action(const Action& act);

}  // namespace trialab
