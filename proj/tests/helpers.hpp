#pragma once

#include <cstdint>
#include <vector>

#include "trialab/actions.hpp"
#include "trialab/algebra.hpp"

namespace trialab::testing {

// --- bundled fixtures, hardcoded independently of the JSON files -----------

inline Algebra fix_l3() {
  return Algebra::leibniz(BinaryTensor::from_entries(3, {{0, 2, 0, -2},
                                                         {1, 1, 0, 1},
                                                         {1, 2, 1, -1},
                                                         {2, 1, 1, 1}}));
}

inline Algebra fix_t2() {
  return Algebra::ternary_leibniz(TernaryTensor::from_entries(2, {{0, 1, 1, 0, 1}}));
}

inline BinaryTensor a2_product() {
  return BinaryTensor::from_entries(2, {{0, 1, 0, 1}, {1, 1, 1, 1}});
}

inline Algebra fix_a2() { return Algebra::associative(a2_product()); }

inline Algebra fix_tri2() {
  return Algebra::triassociative(a2_product(), a2_product(), a2_product());
}

// --- deterministic randomness (stable across platforms) --------------------

struct DetRng {
  std::uint64_t state;

  explicit DetRng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {  // splitmix64
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  int pick(int lo, int hi) { return lo + static_cast<int>(next() % (hi - lo + 1)); }

  // Mostly zero with occasional +-1, so random tensors are sparse enough to
  // sometimes satisfy identities and sometimes not.
  Rational sparse_coeff() {
    const int roll = pick(0, 5);
    if (roll == 0) return 1;
    if (roll == 1) return -1;
    return 0;
  }
};

inline BinaryTensor random_binary(DetRng& rng, int dim) {
  std::vector<BinaryTensor::Entry> entries;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        const Rational c = rng.sparse_coeff();
        if (!c.is_zero()) entries.push_back({i, j, k, c});
      }
  return BinaryTensor::from_entries(dim, std::move(entries));
}

inline TernaryTensor random_ternary(DetRng& rng, int dim) {
  std::vector<TernaryTensor::Entry> entries;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        for (int l = 0; l < dim; ++l) {
          const Rational c = rng.sparse_coeff();
          if (!c.is_zero()) entries.push_back({i, j, k, l, c});
        }
  return TernaryTensor::from_entries(dim, std::move(entries));
}

inline Mat random_map(DetRng& rng, int rows, int cols) {
  Mat m(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) m(r, c) = Rational(rng.pick(-1, 1));
  return m;
}

// --- independent naive oracle ----------------------------------------------
// Nested loops over all basis tuples, every axiom written out longhand with
// dense multilinear evaluation; shares nothing with the engine's table-driven
// axiom dispatch.

ViolationReport oracle_check_structure(const Algebra& a);

// Every dim-2 Leibniz algebra whose structure constants lie in {-1, 0, 1},
// found by exhausting all 3^8 coefficient assignments.
std::vector<Algebra> exhaustive_dim2_leibniz_family();

// All square matrices over the grid, in lexicographic row-major order.
std::vector<Mat> all_matrices(int dim, const std::vector<Rational>& grid);

}  // namespace trialab::testing
