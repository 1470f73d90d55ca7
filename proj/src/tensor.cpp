#include "trialab/tensor.hpp"

#include <algorithm>
#include <tuple>

#include "trialab/error.hpp"

namespace trialab {

namespace {

void check_range(int idx, int dim, const char* what) {
  if (idx < 0 || idx >= dim) throw Error(std::string(what) + ": basis index out of range");
}

}  // namespace

BinaryTensor BinaryTensor::from_entries(int dim, std::vector<Entry> entries) {
  BinaryTensor t(dim);
  std::erase_if(entries, [](const Entry& e) { return e.c.is_zero(); });
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
  });
  for (std::size_t n = 0; n < entries.size(); ++n) {
    const Entry& e = entries[n];
    check_range(e.i, dim, "binary tensor");
    check_range(e.j, dim, "binary tensor");
    check_range(e.k, dim, "binary tensor");
    if (n > 0) {
      const Entry& p = entries[n - 1];
      if (p.i == e.i && p.j == e.j && p.k == e.k)
        throw Error("binary tensor: duplicate entry for the same index triple");
    }
  }
  t.entries_ = std::move(entries);
  return t;
}

BinaryTensor BinaryTensor::build(int dim, const std::function<Vec(int, int)>& product) {
  std::vector<Entry> entries;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Vec v = product(i, j);
      for (int k = 0; k < dim; ++k)
        if (!v[k].is_zero()) entries.push_back({i, j, k, v[k]});
    }
  BinaryTensor t(dim);
  t.entries_ = std::move(entries);  // already sorted and deduplicated
  return t;
}

Vec BinaryTensor::basis_product(int i, int j) const {
  Vec v = Vec::Zero(dim_);
  for (const Entry& e : entries_)
    if (e.i == i && e.j == j) v[e.k] += e.c;
  return v;
}

Vec BinaryTensor::apply(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw Error("binary tensor apply: argument length does not match dimension");
  Vec v = Vec::Zero(dim_);
  for (const Entry& e : entries_) {
    if (x[e.i].is_zero() || y[e.j].is_zero()) continue;
    v[e.k] += x[e.i] * y[e.j] * e.c;
  }
  return v;
}

BinaryTensor BinaryTensor::transposed_args() const {
  std::vector<Entry> entries;
  entries.reserve(entries_.size());
  for (const Entry& e : entries_) entries.push_back({e.j, e.i, e.k, e.c});
  return from_entries(dim_, std::move(entries));
}

bool operator==(const BinaryTensor& a, const BinaryTensor& b) {
  if (a.dim_ != b.dim_ || a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t n = 0; n < a.entries_.size(); ++n) {
    const auto &x = a.entries_[n], &y = b.entries_[n];
    if (x.i != y.i || x.j != y.j || x.k != y.k || x.c != y.c) return false;
  }
  return true;
}

TernaryTensor TernaryTensor::from_entries(int dim, std::vector<Entry> entries) {
  TernaryTensor t(dim);
  std::erase_if(entries, [](const Entry& e) { return e.c.is_zero(); });
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.i, a.j, a.k, a.l) < std::tie(b.i, b.j, b.k, b.l);
  });
  for (std::size_t n = 0; n < entries.size(); ++n) {
    const Entry& e = entries[n];
    check_range(e.i, dim, "ternary tensor");
    check_range(e.j, dim, "ternary tensor");
    check_range(e.k, dim, "ternary tensor");
    check_range(e.l, dim, "ternary tensor");
    if (n > 0) {
      const Entry& p = entries[n - 1];
      if (p.i == e.i && p.j == e.j && p.k == e.k && p.l == e.l)
        throw Error("ternary tensor: duplicate entry for the same index tuple");
    }
  }
  t.entries_ = std::move(entries);
  return t;
}

TernaryTensor TernaryTensor::build(int dim, const std::function<Vec(int, int, int)>& bracket) {
  std::vector<Entry> entries;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        Vec v = bracket(i, j, k);
        for (int l = 0; l < dim; ++l)
          if (!v[l].is_zero()) entries.push_back({i, j, k, l, v[l]});
      }
  TernaryTensor t(dim);
  t.entries_ = std::move(entries);
  return t;
}

Vec TernaryTensor::basis_bracket(int i, int j, int k) const {
  Vec v = Vec::Zero(dim_);
  for (const Entry& e : entries_)
    if (e.i == i && e.j == j && e.k == k) v[e.l] += e.c;
  return v;
}

Vec TernaryTensor::apply(const Vec& x, const Vec& y, const Vec& z) const {
  if (x.size() != dim_ || y.size() != dim_ || z.size() != dim_)
    throw Error("ternary tensor apply: argument length does not match dimension");
  Vec v = Vec::Zero(dim_);
  for (const Entry& e : entries_) {
    if (x[e.i].is_zero() || y[e.j].is_zero() || z[e.k].is_zero()) continue;
    v[e.l] += x[e.i] * y[e.j] * z[e.k] * e.c;
  }
  return v;
}

TernaryTensor TernaryTensor::reversed_args() const {
  std::vector<Entry> entries;
  entries.reserve(entries_.size());
  for (const Entry& e : entries_) entries.push_back({e.k, e.j, e.i, e.l, e.c});
  return from_entries(dim_, std::move(entries));
}

bool operator==(const TernaryTensor& a, const TernaryTensor& b) {
  if (a.dim_ != b.dim_ || a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t n = 0; n < a.entries_.size(); ++n) {
    const auto &x = a.entries_[n], &y = b.entries_[n];
    if (x.i != y.i || x.j != y.j || x.k != y.k || x.l != y.l || x.c != y.c) return false;
  }
  return true;
}

CrossTensor::CrossTensor(int arity, std::array<SlotSpace, 3> layout, int acted_dim, int acting_dim)
    : arity_(arity), layout_(layout), acted_dim_(acted_dim), acting_dim_(acting_dim) {
  if (arity != 2 && arity != 3) throw Error("cross tensor: arity must be 2 or 3");
}

CrossTensor CrossTensor::from_entries(int arity, std::array<SlotSpace, 3> layout, int acted_dim,
                                      int acting_dim, std::vector<Entry> entries) {
  CrossTensor t(arity, layout, acted_dim, acting_dim);
  std::erase_if(entries, [](const Entry& e) { return e.c.is_zero(); });
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.idx, a.out) < std::tie(b.idx, b.out);
  });
  for (std::size_t n = 0; n < entries.size(); ++n) {
    Entry& e = entries[n];
    for (int s = 0; s < arity; ++s) check_range(e.idx[s], t.slot_dim(s), "cross tensor");
    for (int s = arity; s < 3; ++s)
      if (e.idx[s] != 0) throw Error("cross tensor: unused slot index must be zero");
    check_range(e.out, acted_dim, "cross tensor output");
    if (n > 0 && entries[n - 1].idx == e.idx && entries[n - 1].out == e.out)
      throw Error("cross tensor: duplicate entry for the same index tuple");
  }
  t.entries_ = std::move(entries);
  return t;
}

CrossTensor CrossTensor::build(int arity, std::array<SlotSpace, 3> layout, int acted_dim,
                               int acting_dim,
                               const std::function<Vec(const std::array<int, 3>&)>& fn) {
  CrossTensor t(arity, layout, acted_dim, acting_dim);
  std::vector<Entry> entries;
  std::array<int, 3> idx{0, 0, 0};
  const int d0 = t.slot_dim(0), d1 = t.slot_dim(1), d2 = arity == 3 ? t.slot_dim(2) : 1;
  for (idx[0] = 0; idx[0] < d0; ++idx[0])
    for (idx[1] = 0; idx[1] < d1; ++idx[1])
      for (idx[2] = 0; idx[2] < d2; ++idx[2]) {
        Vec v = fn(idx);
        for (int out = 0; out < acted_dim; ++out)
          if (!v[out].is_zero())
            entries.push_back({{idx[0], idx[1], arity == 3 ? idx[2] : 0}, out, v[out]});
      }
  t.entries_ = std::move(entries);
  return t;
}

Vec CrossTensor::basis_value(int a, int b) const {
  Vec v = Vec::Zero(acted_dim_);
  for (const Entry& e : entries_)
    if (e.idx[0] == a && e.idx[1] == b) v[e.out] += e.c;
  return v;
}

Vec CrossTensor::basis_value(int a, int b, int c) const {
  Vec v = Vec::Zero(acted_dim_);
  for (const Entry& e : entries_)
    if (e.idx[0] == a && e.idx[1] == b && e.idx[2] == c) v[e.out] += e.c;
  return v;
}

Vec CrossTensor::apply(const std::vector<Vec>& args) const {
  if (static_cast<int>(args.size()) != arity_)
    throw Error("cross tensor apply: wrong number of arguments");
  for (int s = 0; s < arity_; ++s)
    if (args[s].size() != slot_dim(s))
      throw Error("cross tensor apply: argument length does not match slot dimension");
  Vec v = Vec::Zero(acted_dim_);
  for (const Entry& e : entries_) {
    Rational c = e.c;
    bool dead = false;
    for (int s = 0; s < arity_ && !dead; ++s) {
      const Rational& coord = args[s][e.idx[s]];
      if (coord.is_zero())
        dead = true;
      else
        c *= coord;
    }
    if (!dead) v[e.out] += c;
  }
  return v;
}

Vec CrossTensor::apply(const Vec& x, const Vec& y) const { return apply(std::vector<Vec>{x, y}); }

Vec CrossTensor::apply(const Vec& x, const Vec& y, const Vec& z) const {
  return apply(std::vector<Vec>{x, y, z});
}

bool operator==(const CrossTensor& a, const CrossTensor& b) {
  if (a.arity_ != b.arity_ || a.layout_ != b.layout_ || a.acted_dim_ != b.acted_dim_ ||
      a.acting_dim_ != b.acting_dim_ || a.entries_.size() != b.entries_.size())
    return false;
  for (std::size_t n = 0; n < a.entries_.size(); ++n) {
    const auto &x = a.entries_[n], &y = b.entries_[n];
    if (x.idx != y.idx || x.out != y.out || x.c != y.c) return false;
  }
  return true;
}

}  // namespace trialab
