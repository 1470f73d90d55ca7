#pragma once

#include "trialab/algebra.hpp"

namespace trialab {

/// Block-diagonal structure on dim(a) + dim(b); all cross products vanish.
Algebra direct_sum(const Algebra& a, const Algebra& b);

/// True iff the graph {(x, f(x))} is closed under every product of the
/// direct sum; equivalent to check_morphism(f, a, b) being empty.
bool graph_is_subalgebra(const Mat& f, const Algebra& a, const Algebra& b);

/// Largest subspace multiplying to zero with everything, in every product
/// slot and every argument position. Computed as the kernel of the stacked
/// multiplication matrices.
Subspace annihilator(const Algebra& a);

enum class IdealSide { Left, Right, TwoSided, ThreeSided };

IdealSide ideal_side_from_string(std::string_view s);
std::string_view to_string(IdealSide side);

/// Default closure requirement for the kind: TwoSided for the binary kinds,
/// ThreeSided for ternary Leibniz.
IdealSide canonical_ideal_side(AlgebraKind kind);

/// Closure of the subspace under products with ambient elements in the
/// positions the side prescribes. ThreeSided is only valid for the ternary
/// kind, the other sides only for binary kinds.
bool ideal_check(const Subspace& s, const Algebra& a, IdealSide side);

struct QuotientResult {
  Algebra algebra;    // same kind, on the complement coordinates
  Mat projection;     // surjective morphism from a onto the quotient
};

/// Quotient by a two-sided (three-sided for ternary) ideal. Coordinates are
/// the non-pivot standard basis vectors of the ideal's canonical form, so the
/// result is deterministic across runs.
QuotientResult quotient(const Algebra& a, const Subspace& ideal);

/// Associative algebra viewed as a triassociative one with all three slots
/// equal to the product. Requires a passing associative input.
Algebra promote_associative(const Algebra& a);

/// Slot-swapped-and-transposed products: x *' y reads the mirrored product
/// y * x with left and right exchanged. An involution.
Algebra opposite_triassociative(const Algebra& a);

/// Reversed-argument ternary bracket {x,y,z} = [z,y,x]. Turns a right
/// ternary Leibniz algebra into one satisfying the left identity. An
/// involution.
Algebra swap_ternary_orientation(const Algebra& t);

}  // namespace trialab
