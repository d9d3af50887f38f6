#include "qts/qsim/sparse_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qts::qsim {

double SparseState::squared_norm() const {
  double s = 0.0;
  for (const auto& [key, a] : table_) s += std::norm(a);
  return s;
}

double SparseState::norm() const { return std::sqrt(squared_norm()); }

void SparseState::prune() {
  const double eps = layout_.limits().prune_eps;
  for (auto it = table_.begin(); it != table_.end();) {
    if (std::abs(it->second) <= eps) {
      it = table_.erase(it);
    } else {
      ++it;
    }
  }
}

std::vector<std::uint64_t> SparseState::sorted_support() const {
  std::vector<std::uint64_t> keys;
  keys.reserve(table_.size());
  for (const auto& [key, a] : table_) keys.push_back(key);
  std::sort(keys.begin(), keys.end());
  return keys;
}

double SparseState::distance(const SparseState& a, const SparseState& b) {
  if (!a.layout().compatible(b.layout())) {
    throw std::invalid_argument("SparseState::distance: layouts differ");
  }
  double s = 0.0;
  for (const auto& [key, av] : a.table()) s += std::norm(av - b.amp(key));
  for (const auto& [key, bv] : b.table()) {
    if (a.table().find(key) == a.table().end()) s += std::norm(bv);
  }
  return std::sqrt(s);
}

}  // namespace qts::qsim
