#include "qts/qsim/grover.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace qts::qsim {

namespace {

RegisterLayout binary_layout(std::size_t n_bits, SimLimits limits) {
  return RegisterLayout(algebra::Alphabet::first_d(algebra::PrimeField(2), 2), n_bits, 2, limits);
}

double success_angle(std::size_t m, std::size_t marked) {
  return std::asin(std::sqrt(static_cast<double>(marked) / static_cast<double>(m)));
}

}  // namespace

QueryCircuit grover_or_circuit(std::size_t n_bits, std::size_t iterations, SimLimits limits) {
  std::vector<std::size_t> all(n_bits);
  std::iota(all.begin(), all.end(), std::size_t{0});
  return grover_search_circuit(n_bits, iterations, all, limits);
}

QueryCircuit grover_search_circuit(std::size_t n_bits, std::size_t iterations,
                                   std::span<const std::size_t> search, SimLimits limits) {
  if (search.empty()) throw std::invalid_argument("grover: empty search space");
  RegisterLayout layout = binary_layout(n_bits, limits);
  const std::size_t m = layout.ipw_dim();
  const std::size_t w_dim = layout.work_dim();
  const double len = static_cast<double>(search.size());

  std::vector<double> target(m, 0.0);
  for (std::size_t s : search) {
    if (s >= n_bits) throw std::invalid_argument("grover: search index out of range");
    target[layout.ipw_index(s + 1, 1, 0)] = 1.0 / std::sqrt(len);
  }
  const CMatrix prep = reflection_to(target);

  CMatrix diffusion = CMatrix::identity(m);
  for (std::size_t a : search) {
    for (std::size_t b : search) {
      const std::size_t ia = layout.ipw_index(a + 1, 1, 0);
      const std::size_t ib = layout.ipw_index(b + 1, 1, 0);
      diffusion(ia, ib) = 2.0 / len - (a == b ? 1.0 : 0.0);
    }
  }

  // Hadamard on the p register.
  CMatrix hp(m, m);
  const double r2 = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i <= n_bits; ++i) {
    for (std::size_t w = 0; w < w_dim; ++w) {
      const std::size_t p0 = layout.ipw_index(i, 0, w);
      const std::size_t p1 = layout.ipw_index(i, 1, w);
      hp(p0, p0) = r2;
      hp(p0, p1) = r2;
      hp(p1, p0) = r2;
      hp(p1, p1) = -r2;
    }
  }

  // X on p, then w ^= p. After H-query-H the p register holds NOT x_i.
  CMatrix xp(m, m);
  CMatrix cnot(m, m);
  for (std::size_t i = 0; i <= n_bits; ++i) {
    for (std::size_t w = 0; w < w_dim; ++w) {
      xp(layout.ipw_index(i, 1, w), layout.ipw_index(i, 0, w)) = 1.0;
      xp(layout.ipw_index(i, 0, w), layout.ipw_index(i, 1, w)) = 1.0;
      cnot(layout.ipw_index(i, 0, w), layout.ipw_index(i, 0, w)) = 1.0;
      cnot(layout.ipw_index(i, 1, w ^ 1), layout.ipw_index(i, 1, w)) = 1.0;
    }
  }
  const CMatrix readout = multiply(cnot, multiply(xp, hp));

  std::vector<CMatrix> unitaries;
  if (iterations == 0) {
    unitaries.push_back(multiply(hp, prep));
  } else {
    unitaries.push_back(prep);
    for (std::size_t t = 1; t + 1 < iterations + 1; ++t) unitaries.push_back(diffusion);
    unitaries.push_back(multiply(hp, diffusion));
  }
  unitaries.push_back(readout);

  std::vector<std::vector<Claim>> claims{{Claim{0, 0}}, {Claim{0, 1}}};
  ProblemSpec problem;
  problem.kind = ProblemSpec::Kind::boolean_or;
  return QueryCircuit(std::move(layout), std::move(unitaries), std::move(claims),
                      std::move(problem));
}

std::size_t best_grover_iterations(std::size_t search_size, std::size_t marked) {
  if (marked == 0 || search_size == 0) return 0;
  const double theta = success_angle(search_size, marked);
  const double r_star = (std::numbers::pi / (2.0 * theta) - 1.0) / 2.0;
  if (r_star <= 0.0) return 0;
  const double nearest = std::round(r_star);
  if (std::abs(r_star - nearest) < 1e-9) return static_cast<std::size_t>(nearest);
  const auto success = [&](std::size_t r) {
    const double s = std::sin((2.0 * static_cast<double>(r) + 1.0) * theta);
    return s * s;
  };
  const std::size_t lo = static_cast<std::size_t>(std::floor(r_star));
  const std::size_t hi = lo + 1;
  return success(hi) > success(lo) ? hi : lo;
}

bool grover_iterations_exact(std::size_t search_size, std::size_t marked, std::size_t r) {
  if (marked == 0) return true;  // the readout query reports 0 deterministically
  const double theta = success_angle(search_size, marked);
  const double s = std::sin((2.0 * static_cast<double>(r) + 1.0) * theta);
  return std::abs(std::abs(s) - 1.0) < 1e-12;
}

GroverStats grover_stats(const QueryCircuit& c, std::span<const std::uint8_t> x_codes) {
  const RegisterLayout& L = c.layout();
  const auto v = run_fixed(c, x_codes);
  GroverStats stats;
  stats.p_found.assign(L.n_inputs(), 0.0);
  std::uint8_t or_val = 0;
  for (std::uint8_t b : x_codes) or_val |= b;
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    const double pr = std::norm(v[idx]);
    if (pr == 0.0) continue;
    const std::size_t i = idx / (L.d() * L.work_dim());
    const std::size_t w = idx % L.work_dim();
    if (w == 1) {
      stats.p_detect += pr;
      if (i >= 1) stats.p_found[i - 1] += pr;
    }
    if (w == or_val) stats.p_claim_correct += pr;
  }
  return stats;
}

}  // namespace qts::qsim
