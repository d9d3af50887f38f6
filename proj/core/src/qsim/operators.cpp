#include "qts/qsim/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace qts::qsim {

SparseState apply_phase_oracle(const SparseState& s, OracleDomain domain) {
  const RegisterLayout& L = s.layout();
  SparseState out(L);
  out.reserve(s.support_size());
  for (const auto& [key, a] : s.table()) {
    const std::size_t i = L.i_of(key);
    const std::size_t p = L.p_of(key);
    if (i == 0 || p == 0) {
      out.add(key, a);
      continue;
    }
    const std::uint8_t code = L.x_code(key, i - 1);
    if (code == L.bot_code()) {
      if (domain == OracleDomain::standard) {
        throw std::invalid_argument("phase oracle: bot at the queried register");
      }
      out.add(key, a);
      continue;
    }
    out.add(key, a * L.query_phase(p, code));
  }
  return out;
}

SparseState apply_s1(const SparseState& s, std::size_t reg) {
  const RegisterLayout& L = s.layout();
  if (reg >= L.n_inputs()) throw std::invalid_argument("apply_s1: register out of range");
  const std::size_t d = L.d();
  const std::uint64_t stride = L.x_stride(reg);
  const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
  const double inv_d = 1.0 / static_cast<double>(d);

  SparseState out(L);
  out.reserve(s.support_size() * 2);
  for (const auto& [key, a] : s.table()) {
    const std::uint8_t code = L.x_code(key, reg);
    const std::uint64_t base = key - static_cast<std::uint64_t>(code) * stride;
    if (code == L.bot_code()) {
      // S_1 |bot> = d^{-1/2} sum_y |y>
      for (std::size_t y = 0; y < d; ++y) out.add(base + y * stride, a * inv_sqrt_d);
    } else {
      // S_1 |y0> = d^{-1/2} |bot> + |y0> - d^{-1} sum_y |y>
      out.add(base + static_cast<std::uint64_t>(L.bot_code()) * stride, a * inv_sqrt_d);
      out.add(key, a);
      for (std::size_t y = 0; y < d; ++y) out.add(base + y * stride, -a * inv_d);
    }
  }
  out.prune();
  return out;
}

SparseState apply_s(const SparseState& s) {
  SparseState cur = s;
  for (std::size_t j = 0; j < s.layout().n_inputs(); ++j) cur = apply_s1(cur, j);
  return cur;
}

SparseState apply_recording_oracle(const SparseState& s) {
  return apply_s(apply_phase_oracle(apply_s(s), OracleDomain::extended));
}

SparseState apply_ipw_unitary(const SparseState& s, const CMatrix& u) {
  const RegisterLayout& L = s.layout();
  const std::size_t m = L.ipw_dim();
  if (u.rows() != m || u.cols() != m) {
    throw std::invalid_argument("apply_ipw_unitary: matrix does not match the (i,p,w) space");
  }
  // Group amplitudes by the oracle-register part of the key.
  std::unordered_map<std::uint64_t, std::vector<std::pair<std::size_t, cd>>> groups;
  groups.reserve(s.support_size());
  for (const auto& [key, a] : s.table()) {
    groups[key / m].push_back({static_cast<std::size_t>(key % m), a});
  }
  SparseState out(L);
  out.reserve(s.support_size());
  std::vector<cd> col(m);
  for (const auto& [xpart, entries] : groups) {
    std::fill(col.begin(), col.end(), cd{});
    for (const auto& [c, a] : entries) {
      for (std::size_t r = 0; r < m; ++r) col[r] += u(r, c) * a;
    }
    const std::uint64_t base = xpart * m;
    for (std::size_t r = 0; r < m; ++r) {
      if (col[r] != cd{}) out.add(base + r, col[r]);
    }
  }
  out.prune();
  return out;
}

std::size_t max_nonbot_support(const SparseState& s) {
  const RegisterLayout& L = s.layout();
  std::size_t worst = 0;
  for (const auto& [key, a] : s.table()) {
    std::size_t nonbot = 0;
    for (std::size_t j = 0; j < L.n_inputs(); ++j) {
      if (L.x_code(key, j) != L.bot_code()) ++nonbot;
    }
    worst = std::max(worst, nonbot);
  }
  return worst;
}

}  // namespace qts::qsim
