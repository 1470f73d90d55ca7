#pragma once

#include "trialab/algebra.hpp"

namespace trialab {

/// Bracket variants carried from a triassociative algebra to a ternary one:
///   Main  [x,y,z] = x -| (y _|_ z - z _|_ y) - (y _|_ z - z _|_ y) |- x
///   B1    [x,y,z] = x -| (y _|_ z) - (y _|_ z) |- x
///   B2    [x,y,z] = (z _|_ y) |- x - x -| (z _|_ y)
/// Main = B1 minus B1 with the last two arguments swapped, entrywise.
enum class TernaryVariant { Main, B1, B2 };

TernaryVariant ternary_variant_from_string(std::string_view s);

/// Ternary Leibniz algebra on the same space, bracket per the variant.
/// Requires a passing triassociative input.
Algebra t_from_triassoc(const Algebra& a, TernaryVariant variant = TernaryVariant::Main);

/// Nested-bracket ternary algebra {x,y,z} = [x,[y,z]] of a passing Leibniz
/// algebra. Leibniz morphisms are ternary morphisms of the results.
Algebra t_from_leibniz(const Algebra& l);

/// Ternary bracket attached to an associative algebra with an averaging
/// operator: [x,y,z] = xy b(z) - x b(z) y - y b(z) x + b(z) y x
/// (products associate to the left). Requires a passing associative algebra
/// and a passing averaging check for b.
Algebra ternary_from_assoc_averaging(const Algebra& a, const Mat& beta);

}  // namespace trialab
