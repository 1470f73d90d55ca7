#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "trialab/constructions.hpp"

using namespace trialab;
using namespace trialab::testing;

namespace {

Algebra perturbed_l3() {
  // [e2,e2] = e1 replaced by e1 + e2
  return Algebra::leibniz(BinaryTensor::from_entries(
      3, {{0, 2, 0, -2}, {1, 1, 0, 1}, {1, 1, 1, 1}, {1, 2, 1, -1}, {2, 1, 1, 1}}));
}

}  // namespace

TEST_CASE("evaluate is the multilinear extension") {
  const Algebra a2 = fix_a2();
  CHECK(a2.evaluate(Slot::Bracket, unit_vec(2, 0), unit_vec(2, 1)) == unit_vec(2, 0));
  CHECK(is_zero(a2.evaluate(Slot::Bracket, Vec(Vec::Zero(2)), unit_vec(2, 1))));

  const Algebra l3 = fix_l3();
  Vec arg = unit_vec(3, 1) + unit_vec(3, 2);  // e2 + e3
  Vec expected = unit_vec(3, 0) + unit_vec(3, 1);
  CHECK(l3.evaluate(Slot::Bracket, arg, unit_vec(3, 1)) == expected);

  CHECK_THROWS_AS(a2.evaluate(Slot::Left, unit_vec(2, 0), unit_vec(2, 1)), Error);
  CHECK_THROWS_AS(l3.evaluate(Slot::Bracket, unit_vec(2, 0), unit_vec(3, 1)), Error);
}

TEST_CASE("fixtures pass their structure checks") {
  CHECK(check_structure(fix_l3()).empty());
  CHECK(check_structure(fix_t2()).empty());
  CHECK(check_structure(fix_a2()).empty());
  CHECK(check_structure(fix_tri2()).empty());
}

TEST_CASE("zero-product algebras of any kind and dimension pass") {
  for (AlgebraKind kind : {AlgebraKind::Associative, AlgebraKind::Triassociative,
                           AlgebraKind::Leibniz, AlgebraKind::TernaryLeibniz})
    for (int dim : {0, 1, 2, 3}) CHECK(check_structure(Algebra::zero(kind, dim)).empty());
}

TEST_CASE("perturbed Leibniz fixture is caught with the right witness") {
  const ViolationReport report = check_structure(perturbed_l3());
  REQUIRE_FALSE(report.empty());
  bool found = false;
  for (const Violation& v : report)
    if (v.axiom_id == "leibniz" && v.witness == std::vector<int>{1, 1, 2}) found = true;
  CHECK(found);
}

TEST_CASE("engine matches the naive oracle on fixtures and random tensors") {
  CHECK(check_structure(fix_l3()) == oracle_check_structure(fix_l3()));
  CHECK(check_structure(perturbed_l3()) == oracle_check_structure(perturbed_l3()));
  CHECK(check_structure(fix_tri2()) == oracle_check_structure(fix_tri2()));
  CHECK(check_structure(fix_t2()) == oracle_check_structure(fix_t2()));

  DetRng rng(101);
  for (int trial = 0; trial < 15; ++trial) {
    const int dim = rng.pick(1, 3);
    const Algebra assoc = Algebra::associative(random_binary(rng, dim));
    CHECK(check_structure(assoc) == oracle_check_structure(assoc));
    const Algebra leib = Algebra::leibniz(random_binary(rng, dim));
    CHECK(check_structure(leib) == oracle_check_structure(leib));
    const Algebra tri = Algebra::triassociative(random_binary(rng, dim), random_binary(rng, dim),
                                                random_binary(rng, dim));
    CHECK(check_structure(tri) == oracle_check_structure(tri));
    const Algebra tern = Algebra::ternary_leibniz(random_ternary(rng, dim));
    CHECK(check_structure(tern) == oracle_check_structure(tern));
  }
}

TEST_CASE("morphism checks") {
  const Algebra l3 = fix_l3();
  CHECK(check_morphism(Mat::Identity(3, 3), l3, l3).empty());
  CHECK(check_morphism(Mat::Zero(3, 3), l3, l3).empty());
  CHECK(check_morphism(Mat::Zero(2, 3), Algebra::zero(AlgebraKind::Leibniz, 3),
                       Algebra::zero(AlgebraKind::Leibniz, 2))
            .empty());

  const Algebra tri2 = fix_tri2();
  Mat diag = Mat::Zero(2, 2);
  diag(0, 0) = 1;
  diag(1, 1) = 2;
  const ViolationReport report = check_morphism(diag, tri2, tri2);
  CHECK_FALSE(report.empty());

  CHECK_THROWS_AS(check_morphism(Mat::Identity(3, 3), l3, fix_a2()), Error);
  CHECK_THROWS_AS(check_morphism(Mat::Identity(2, 2), l3, l3), Error);
}

TEST_CASE("direct sum embeds both summands with zero cross terms") {
  const Algebra sum = direct_sum(fix_tri2(), Algebra::zero(AlgebraKind::Triassociative, 1));
  CHECK(sum.dim() == 3);
  CHECK(check_structure(sum).empty());
  // embedded product e1 * e2 = e1
  CHECK(sum.evaluate(Slot::Left, unit_vec(3, 0), unit_vec(3, 1)) == unit_vec(3, 0));
  // third basis vector annihilates
  for (Slot slot : sum.slots()) {
    CHECK(is_zero(sum.evaluate(slot, unit_vec(3, 2), unit_vec(3, 0) + unit_vec(3, 1))));
    CHECK(is_zero(sum.evaluate(slot, unit_vec(3, 0) + unit_vec(3, 1), unit_vec(3, 2))));
  }

  const Algebra twice = direct_sum(fix_l3(), fix_l3());
  CHECK(twice.dim() == 6);
  CHECK(check_structure(twice).empty());
  // cross products of the two summands vanish
  CHECK(is_zero(twice.evaluate(Slot::Bracket, unit_vec(6, 1), unit_vec(6, 4))));

  CHECK_THROWS_AS(direct_sum(fix_l3(), fix_a2()), Error);
}

TEST_CASE("graph criterion is equivalent to the morphism check") {
  CHECK(graph_is_subalgebra(Mat::Identity(2, 2), fix_tri2(), fix_tri2()));
  Mat diag = Mat::Zero(2, 2);
  diag(0, 0) = 1;
  diag(1, 1) = 2;
  CHECK_FALSE(graph_is_subalgebra(diag, fix_tri2(), fix_tri2()));

  const Algebra l3 = fix_l3();
  DetRng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const Mat f = random_map(rng, 3, 3);
    CHECK(graph_is_subalgebra(f, l3, l3) == check_morphism(f, l3, l3).empty());
  }

  const Algebra t2 = fix_t2();
  for (int trial = 0; trial < 40; ++trial) {
    const Mat f = random_map(rng, 2, 2);
    CHECK(graph_is_subalgebra(f, t2, t2) == check_morphism(f, t2, t2).empty());
  }
}

TEST_CASE("annihilator examples") {
  CHECK(annihilator(Algebra::zero(AlgebraKind::Leibniz, 3)).dim() == 3);
  CHECK(annihilator(fix_a2()).dim() == 0);
  CHECK(annihilator(fix_t2()).dim() == 0);

  // direct sum annihilator contains the sum of the annihilators
  const Algebra sum = direct_sum(fix_tri2(), Algebra::zero(AlgebraKind::Triassociative, 2));
  const Subspace ann = annihilator(sum);
  CHECK(ann.dim() == 2);
  CHECK(ann.contains(unit_vec(4, 2)));
  CHECK(ann.contains(unit_vec(4, 3)));
}

TEST_CASE("ideal checks by side") {
  const Algebra tri2 = fix_tri2();
  const Subspace span_e1 = Subspace::span_of_rows(Mat(unit_vec(2, 0).transpose()));
  const Subspace span_e2 = Subspace::span_of_rows(Mat(unit_vec(2, 1).transpose()));

  CHECK(ideal_check(span_e1, tri2, IdealSide::TwoSided));
  CHECK(ideal_check(Subspace::full(2), tri2, IdealSide::TwoSided));
  CHECK_FALSE(ideal_check(span_e2, tri2, IdealSide::TwoSided));
  // e1 * e2 = e1 stays inside span{e1} but e2 * e1 = 0 does too: left holds
  CHECK(ideal_check(span_e1, tri2, IdealSide::Left));
  CHECK(ideal_check(span_e1, tri2, IdealSide::Right));

  const Subspace t_ideal = Subspace::span_of_rows(Mat(unit_vec(2, 0).transpose()));
  CHECK(ideal_check(t_ideal, fix_t2(), IdealSide::ThreeSided));
  CHECK_THROWS_AS(ideal_check(t_ideal, fix_t2(), IdealSide::TwoSided), Error);
  CHECK_THROWS_AS(ideal_check(span_e1, tri2, IdealSide::ThreeSided), Error);

  const Subspace l_ideal =
      Subspace::span_of_rows(Mat(Mat::Identity(3, 3).topRows(2)));
  CHECK(ideal_check(l_ideal, fix_l3(), IdealSide::TwoSided));
}

TEST_CASE("quotient examples") {
  const Algebra tri2 = fix_tri2();
  const Subspace span_e1 = Subspace::span_of_rows(Mat(unit_vec(2, 0).transpose()));

  const QuotientResult q = quotient(tri2, span_e1);
  CHECK(q.algebra.dim() == 1);
  for (Slot slot : q.algebra.slots())
    CHECK(q.algebra.evaluate(slot, unit_vec(1, 0), unit_vec(1, 0)) == unit_vec(1, 0));
  CHECK(check_structure(q.algebra).empty());
  CHECK(check_morphism(q.projection, tri2, q.algebra).empty());

  const QuotientResult whole = quotient(tri2, Subspace(2));
  CHECK(whole.algebra == tri2);

  const QuotientResult nothing = quotient(tri2, Subspace::full(2));
  CHECK(nothing.algebra.dim() == 0);

  const Subspace span_e2 = Subspace::span_of_rows(Mat(unit_vec(2, 1).transpose()));
  CHECK_THROWS_AS(quotient(tri2, span_e2), Error);

  // Leibniz quotient by span{e1, e2}
  const QuotientResult lq =
      quotient(fix_l3(), Subspace::span_of_rows(Mat(Mat::Identity(3, 3).topRows(2))));
  CHECK(lq.algebra.dim() == 1);
  CHECK(check_structure(lq.algebra).empty());
  CHECK(check_morphism(lq.projection, fix_l3(), lq.algebra).empty());
}

TEST_CASE("promotion to triassociative") {
  CHECK(promote_associative(fix_a2()) == fix_tri2());
  CHECK(promote_associative(Algebra::zero(AlgebraKind::Associative, 2)) ==
        Algebra::zero(AlgebraKind::Triassociative, 2));

  const Algebra idem =
      Algebra::associative(BinaryTensor::from_entries(1, {{0, 0, 0, 1}}));
  CHECK(check_structure(promote_associative(idem)).empty());

  CHECK_THROWS_AS(promote_associative(fix_l3()), Error);
  const Algebra bad = Algebra::associative(BinaryTensor::from_entries(2, {{0, 0, 1, 1}, {1, 0, 0, 1}}));
  if (!check_structure(bad).empty()) CHECK_THROWS_AS(promote_associative(bad), Error);
}

TEST_CASE("opposite triassociative algebra") {
  const Algebra opp = opposite_triassociative(fix_tri2());
  CHECK(check_structure(opp).empty());
  // x -|' y = y |- x : e2 -|' e1 = e1 |- e2 = e1
  CHECK(opp.evaluate(Slot::Left, unit_vec(2, 1), unit_vec(2, 0)) == unit_vec(2, 0));
  CHECK(opposite_triassociative(opp) == fix_tri2());
  CHECK(opposite_triassociative(Algebra::zero(AlgebraKind::Triassociative, 2)) ==
        Algebra::zero(AlgebraKind::Triassociative, 2));
  CHECK_THROWS_AS(opposite_triassociative(fix_a2()), Error);
}

TEST_CASE("opposite preserves the structure verdict") {
  DetRng rng(808);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = rng.pick(1, 3);
    const Algebra a = Algebra::triassociative(random_binary(rng, dim), random_binary(rng, dim),
                                              random_binary(rng, dim));
    CHECK(check_structure(a).empty() == check_structure(opposite_triassociative(a)).empty());
  }
}

TEST_CASE("ternary orientation swap") {
  const Algebra swapped = swap_ternary_orientation(fix_t2());
  CHECK(swapped.ternary_product() == TernaryTensor::from_entries(2, {{1, 1, 0, 0, 1}}));
  CHECK(swap_ternary_orientation(swapped) == fix_t2());
  CHECK(check_left_ternary_structure(swapped).empty());
  CHECK_THROWS_AS(swap_ternary_orientation(fix_l3()), Error);

  // orientation swap preserves the verdict: right identity <-> left identity
  DetRng rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    const Algebra t = Algebra::ternary_leibniz(random_ternary(rng, 2));
    CHECK(check_structure(t).empty() ==
          check_left_ternary_structure(swap_ternary_orientation(t)).empty());
  }
}

TEST_CASE("violation reports are sorted deterministically") {
  const ViolationReport report = check_structure(perturbed_l3());
  for (std::size_t i = 1; i < report.size(); ++i) {
    const auto& a = report.violations()[i - 1];
    const auto& b = report.violations()[i];
    CHECK(std::tie(a.axiom_id, a.witness) <= std::tie(b.axiom_id, b.witness));
  }
}
