#pragma once

#include <complex>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "qts/qsim/layout.hpp"

namespace qts::qsim {

// Sparse complex state over packed basis labels. A state is a value: every
// operator returns a fresh state, nothing is mutated in place by callers.
class SparseState {
 public:
  explicit SparseState(RegisterLayout layout) : layout_(std::move(layout)) {}

  const RegisterLayout& layout() const { return layout_; }

  void add(std::uint64_t key, std::complex<double> amp) { table_[key] += amp; }
  void set(std::uint64_t key, std::complex<double> amp) { table_[key] = amp; }
  std::complex<double> amp(std::uint64_t key) const {
    const auto it = table_.find(key);
    return it == table_.end() ? std::complex<double>{} : it->second;
  }

  std::size_t support_size() const { return table_.size(); }
  double squared_norm() const;
  double norm() const;
  void prune();  // drop amplitudes with |a| <= prune_eps
  void reserve(std::size_t n) { table_.reserve(n); }

  const std::unordered_map<std::uint64_t, std::complex<double>>& table() const { return table_; }
  std::vector<std::uint64_t> sorted_support() const;

  // l2 distance between two states over the same layout.
  static double distance(const SparseState& a, const SparseState& b);

 private:
  RegisterLayout layout_;
  std::unordered_map<std::uint64_t, std::complex<double>> table_;
};

}  // namespace qts::qsim
