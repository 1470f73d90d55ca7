#include "trialab/report.hpp"

#include <algorithm>
#include <tuple>

namespace trialab {

bool operator==(const Violation& a, const Violation& b) {
  return a.axiom_id == b.axiom_id && a.witness == b.witness && a.discrepancy == b.discrepancy;
}

void ViolationReport::add(std::string axiom_id, std::vector<int> witness, const Vec& discrepancy) {
  Violation v;
  v.axiom_id = std::move(axiom_id);
  v.witness = std::move(witness);
  v.discrepancy.reserve(discrepancy.size());
  for (Index i = 0; i < discrepancy.size(); ++i) v.discrepancy.push_back(discrepancy[i]);
  violations_.push_back(std::move(v));
}

void ViolationReport::merge(ViolationReport other) {
  violations_.insert(violations_.end(), std::make_move_iterator(other.violations_.begin()),
                     std::make_move_iterator(other.violations_.end()));
}

void ViolationReport::sort() {
  std::sort(violations_.begin(), violations_.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.axiom_id, a.witness) < std::tie(b.axiom_id, b.witness);
  });
}

ViolationReport ViolationReport::prefixed(const std::string& prefix) const {
  ViolationReport out;
  for (Violation v : violations_) {
    v.axiom_id = prefix + v.axiom_id;
    out.add(std::move(v));
  }
  return out;
}

}  // namespace trialab
