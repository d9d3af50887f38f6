#include "qts/coloring/grover_bmm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qts/support/errors.hpp"

namespace qts::coloring {

using qsim::grover_or_circuit;
using qsim::grover_search_circuit;
using qsim::grover_stats;

BmmReport grover_bmm(const algebra::BoolMatrix& a, const algebra::BoolMatrix& b,
                     const BmmOptions& options) {
  if (a.cols() != b.rows()) throw std::invalid_argument("grover_bmm: dimension mismatch");
  const std::size_t n = a.cols();
  const std::size_t rows = a.rows(), cols = b.cols();

  BmmReport report{algebra::BoolMatrix(rows, cols)};
  // One circuit per iteration count actually used; indicators share n.
  std::vector<std::optional<qsim::QueryCircuit>> circuits;
  const auto circuit_for = [&](std::size_t r) -> const qsim::QueryCircuit& {
    if (circuits.size() <= r) circuits.resize(r + 1);
    if (!circuits[r]) circuits[r] = grover_or_circuit(n, r, options.limits);
    return *circuits[r];
  };

  std::vector<std::uint8_t> z(n);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      std::size_t overlap = 0;
      for (std::size_t k = 0; k < n; ++k) {
        z[k] = (a(i, k) && b(k, j)) ? 1 : 0;
        overlap += z[k];
      }
      const std::size_t iters = options.iterations < 0
                                    ? qsim::best_grover_iterations(n, overlap)
                                    : static_cast<std::size_t>(options.iterations);
      const auto stats = grover_stats(circuit_for(iters), z);
      const bool claim = stats.p_detect > 0.5;
      report.computed.set(i, j, claim);
      const double p_correct = stats.p_claim_correct;
      report.grover_queries += iters;
      report.readout_queries += 1;
      report.min_p_correct = std::min(report.min_p_correct, p_correct);
      if (p_correct < 1.0 - options.success_tol) ++report.error_count;
      report.entries.push_back(BmmEntryStat{i, j, overlap, iters, p_correct});
    }
  }
  return report;
}

SparseMvReport sparse_mv(const algebra::BoolMatrix& a, std::span<const std::uint8_t> x,
                         std::size_t weight_budget, const qsim::SimLimits& limits) {
  if (a.cols() != x.size()) throw std::invalid_argument("sparse_mv: dimension mismatch");
  const std::size_t n = x.size();
  const std::size_t weight =
      static_cast<std::size_t>(std::count(x.begin(), x.end(), std::uint8_t{1}));
  if (weight > weight_budget) {
    throw budget_error("sparse_mv: |x| exceeds the weight budget");
  }

  SparseMvReport report;
  std::vector<std::size_t> remaining(n);
  std::iota(remaining.begin(), remaining.end(), std::size_t{0});

  while (!remaining.empty()) {
    std::size_t marked = 0;
    for (std::size_t idx : remaining) marked += x[idx];
    const std::size_t iters = qsim::best_grover_iterations(remaining.size(), marked);
    const auto circuit = grover_search_circuit(n, iters, remaining, limits);
    const auto stats = grover_stats(circuit, x);
    report.search_queries += iters + 1;  // iterates plus the readout query

    SparseMvRound round;
    round.search_size = remaining.size();
    round.marked = marked;
    round.iterations = iters;
    round.p_detect = stats.p_detect;
    if (stats.p_detect > 0.5) {
      // Majority branch: something was found; the measured index with w = 1
      // always carries a true 1. Lowest index on ties.
      std::size_t found = n;
      double best = -1.0;
      for (std::size_t idx = 0; idx < n; ++idx) {
        if (stats.p_found[idx] > best + 1e-15) {
          best = stats.p_found[idx];
          found = idx;
        }
      }
      round.found = found;
      round.branch_error = 1.0 - stats.p_detect;
      report.rounds.push_back(round);
      report.support.push_back(found);
      remaining.erase(std::remove(remaining.begin(), remaining.end(), found), remaining.end());
    } else {
      // Majority branch: nothing found, stop. If ones remain this is the
      // undetected-one event, with the detection mass as the error.
      round.branch_error = stats.p_detect;
      report.rounds.push_back(round);
      break;
    }
  }

  std::sort(report.support.begin(), report.support.end());
  std::vector<std::size_t> truth;
  for (std::size_t idx = 0; idx < n; ++idx) {
    if (x[idx]) truth.push_back(idx);
  }
  report.support_exact = report.support == truth;

  // Output phase: classical, zero queries.
  std::vector<std::uint8_t> found_x(n, 0);
  for (std::size_t idx : report.support) found_x[idx] = 1;
  report.product = algebra::bool_mat_vec(a, found_x);
  return report;
}

}  // namespace qts::coloring
