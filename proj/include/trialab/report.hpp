#pragma once

#include <string>
#include <vector>

#include "trialab/linalg.hpp"

namespace trialab {

/// One failed identity instance: which identity, at which basis tuple, and
/// the exact difference of the two sides. The discrepancy is never zero.
struct Violation {
  std::string axiom_id;
  std::vector<int> witness;  // 0-based basis indices
  std::vector<Rational> discrepancy;
};

bool operator==(const Violation& a, const Violation& b);

/// Sorted list of violations; empty means every checked identity holds.
class ViolationReport {
 public:
  ViolationReport() = default;

  void add(std::string axiom_id, std::vector<int> witness, const Vec& discrepancy);
  void add(Violation v) { violations_.push_back(std::move(v)); }
  void merge(ViolationReport other);

  /// Lexicographic (axiom_id, witness) order; call once after collection so
  /// output is deterministic regardless of worker scheduling.
  void sort();

  /// Copy with every axiom id prefixed; used when concatenating reports of
  /// several named sub-checks.
  ViolationReport prefixed(const std::string& prefix) const;

  bool empty() const { return violations_.empty(); }
  std::size_t size() const { return violations_.size(); }
  const std::vector<Violation>& violations() const { return violations_; }
  auto begin() const { return violations_.begin(); }
  auto end() const { return violations_.end(); }

  friend bool operator==(const ViolationReport& a, const ViolationReport& b) {
    return a.violations_ == b.violations_;
  }

 private:
  std::vector<Violation> violations_;
};

}  // namespace trialab
