#pragma once

#include <array>
#include <functional>
#include <vector>

#include "trialab/linalg.hpp"

namespace trialab {

/// Sparse structure constants of a bilinear map: entry (i, j, k, c) means the
/// product of basis vectors e_i and e_j contains c * e_k. Entries are kept
/// sorted by (i, j, k) with no zero coefficients, so equality of tensors is
/// equality of the canonical entry lists.
class BinaryTensor {
 public:
  struct Entry {
    int i, j, k;
    Rational c;
  };

  BinaryTensor() = default;
  explicit BinaryTensor(int dim) : dim_(dim) {}

  static BinaryTensor from_entries(int dim, std::vector<Entry> entries);

  /// Samples the given bilinear map on all basis pairs.
  static BinaryTensor build(int dim, const std::function<Vec(int, int)>& product);

  int dim() const { return dim_; }
  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  /// Product of basis vectors e_i and e_j as a dense vector.
  Vec basis_product(int i, int j) const;

  /// Bilinear extension to arbitrary coordinate vectors.
  Vec apply(const Vec& x, const Vec& y) const;

  /// Structure constants of the map (x, y) -> product(y, x).
  BinaryTensor transposed_args() const;

  friend bool operator==(const BinaryTensor& a, const BinaryTensor& b);

 private:
  int dim_ = 0;
  std::vector<Entry> entries_;
};

/// Sparse structure constants of a trilinear map: entry (i, j, k, l, c) means
/// the bracket of e_i, e_j, e_k contains c * e_l. Canonical sorted form as
/// for BinaryTensor.
class TernaryTensor {
 public:
  struct Entry {
    int i, j, k, l;
    Rational c;
  };

  TernaryTensor() = default;
  explicit TernaryTensor(int dim) : dim_(dim) {}

  static TernaryTensor from_entries(int dim, std::vector<Entry> entries);
  static TernaryTensor build(int dim, const std::function<Vec(int, int, int)>& bracket);

  int dim() const { return dim_; }
  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  Vec basis_bracket(int i, int j, int k) const;
  Vec apply(const Vec& x, const Vec& y, const Vec& z) const;

  /// Structure constants of (x, y, z) -> bracket(z, y, x).
  TernaryTensor reversed_args() const;

  friend bool operator==(const TernaryTensor& a, const TernaryTensor& b);

 private:
  int dim_ = 0;
  std::vector<Entry> entries_;
};

/// Which vector space an argument slot of a cross tensor draws from.
enum class SlotSpace { Acted, Acting };

/// Sparse multilinear map mixing the acted and acting spaces; the output
/// always lands in the acted space. Carries the action maps of all kinds.
class CrossTensor {
 public:
  struct Entry {
    std::array<int, 3> idx;  // idx[arity..2] unused, kept 0
    int out;
    Rational c;
  };

  CrossTensor() = default;
  CrossTensor(int arity, std::array<SlotSpace, 3> layout, int acted_dim, int acting_dim);

  static CrossTensor from_entries(int arity, std::array<SlotSpace, 3> layout, int acted_dim,
                                  int acting_dim, std::vector<Entry> entries);

  /// Samples a multilinear map on all basis tuples; fn receives one basis
  /// index per slot and returns a vector in the acted space.
  static CrossTensor build(int arity, std::array<SlotSpace, 3> layout, int acted_dim,
                           int acting_dim, const std::function<Vec(const std::array<int, 3>&)>& fn);

  int arity() const { return arity_; }
  const std::array<SlotSpace, 3>& layout() const { return layout_; }
  int acted_dim() const { return acted_dim_; }
  int acting_dim() const { return acting_dim_; }
  int slot_dim(int slot) const {
    return layout_[slot] == SlotSpace::Acted ? acted_dim_ : acting_dim_;
  }
  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  Vec basis_value(int a, int b) const;
  Vec basis_value(int a, int b, int c) const;

  /// Multilinear extension; args.size() must equal arity and each argument
  /// must have its slot's dimension.
  Vec apply(const std::vector<Vec>& args) const;
  Vec apply(const Vec& x, const Vec& y) const;
  Vec apply(const Vec& x, const Vec& y, const Vec& z) const;

  friend bool operator==(const CrossTensor& a, const CrossTensor& b);

 private:
  int arity_ = 2;
  std::array<SlotSpace, 3> layout_{SlotSpace::Acted, SlotSpace::Acting, SlotSpace::Acting};
  int acted_dim_ = 0;
  int acting_dim_ = 0;
  std::vector<Entry> entries_;
};

}  // namespace trialab
