#pragma once

#include <utility>

#include "trialab/actions.hpp"

namespace trialab {

/// A morphism phi from the acted to the acting algebra together with the
/// action, subject to equivariance and Peiffer-type identities checked by
/// check_crossed_module.
struct CrossedModule {
  Action action;
  Mat phi;  // acting.dim() x acted.dim()

  AlgebraKind kind() const { return action.kind(); }
  const Algebra& acted() const { return action.acted(); }
  const Algebra& acting() const { return action.acting(); }
};

/// Equivariance and Peiffer identities of the kind, on all basis tuples,
/// plus the morphism identities for phi itself (ids prefixed "phi-").
/// Throws if the underlying action is invalid.
ViolationReport check_crossed_module(const CrossedModule& cm);

/// Square commutation phi' o alpha = beta o phi, morphism identities for
/// alpha and beta, and the intertwining of every cross tensor.
ViolationReport check_crossed_morphism(const Mat& alpha, const Mat& beta, const CrossedModule& src,
                                       const CrossedModule& dst);

/// The inclusion of an ideal with the ambient products as action.
CrossedModule crossed_from_ideal(const Algebra& a, const Subspace& ideal);

/// (A, A, id) with the structure self-action.
CrossedModule identity_crossed_module(const Algebra& a);

struct CrossedModuleProperties {
  bool kernel_in_annihilator = false;
  bool image_is_ideal = false;
  bool image_acts_trivially_on_annihilator = false;

  bool all() const {
    return kernel_in_annihilator && image_is_ideal && image_acts_trivially_on_annihilator;
  }
};

/// Structural consequences every valid crossed module must satisfy; a false
/// flag signals a defect in a checker or construction. Throws on an invalid
/// crossed module.
CrossedModuleProperties crossed_module_properties(const CrossedModule& cm);

/// Morphism report of (x, a) -> (-x, phi(x) + a) on the semidirect algebra.
/// Empty for every valid triassociative crossed module; run on perturbed
/// inputs it localizes the break.
ViolationReport shift_morphism_check(const CrossedModule& cm);

/// Ternary action of the commutator-bracket ternary algebras induced by a
/// triassociative action.
Action induce_ternary_action_from_triassoc(const Action& act);

/// Ternary crossed module induced by a valid triassociative crossed module.
CrossedModule induce_ternary_cm_from_triassoc(const CrossedModule& cm);

/// Ternary action of the nested-bracket ternary algebras induced by a
/// Leibniz action.
Action induce_ternary_action_from_leibniz(const Action& act);

/// Ternary crossed module induced by a valid Leibniz crossed module.
CrossedModule induce_ternary_cm_from_leibniz(const CrossedModule& cm);

/// Rota-Baxter twist of a Leibniz crossed module: first the crossed module
/// over the derived Leibniz algebras with the twisted cross maps, then its
/// induced ternary crossed module. The two maps must be Rota-Baxter of the
/// weight on their algebras and compatible with the action; failures are
/// reported by name.
std::pair<CrossedModule, CrossedModule> rb_twist_leibniz_cm(const CrossedModule& cm,
                                                            const Mat& r_acted,
                                                            const Mat& r_acting,
                                                            const Rational& weight);

/// Averaging twist of a triassociative crossed module: both maps must be
/// injective averaging operators commuting with phi; the result lives on the
/// averaging-derived algebras with the cross maps precomposed on the acted
/// argument.
CrossedModule averaging_twist_triassoc_cm(const CrossedModule& cm, const Mat& beta_acted,
                                          const Mat& beta_acting);

/// Rota-Baxter twist of a ternary action (weight-0 form): both maps must be
/// ternary Rota-Baxter and satisfy the six action compatibility identities;
/// returns the action of the derived algebras with the three-term twisted
/// tensors.
Action rb_twist_ternary_action(const Action& act, const Mat& r_acted, const Mat& r_acting);

/// Whether the ternary algebra of the semidirect sum equals the semidirect
/// sum of the induced ternary action, tensor for tensor. True for every
/// valid triassociative action.
bool functor_semidirect_compat(const Action& act);

/// Morphism reports of the three canonical maps between induced ternary
/// semidirect products (ids prefixed "map-i:", "map-ii:", "map-iii:"):
///   i    (phi, id) from T(acted) x| T(acting) to T(acting) x| T(acting)
///   ii   (id, phi) from T(acted) x| T(acted) to T(acted) x| T(acting)
///   iii  (x, a) -> (-x, phi(x) + a) on T(acted) x| T(acting)
ViolationReport semidirect_morphism_maps(const CrossedModule& cm);

}  // namespace trialab
