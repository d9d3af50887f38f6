#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "qts/algebra/bool_matrix.hpp"
#include "qts/qsim/grover.hpp"

namespace qts::coloring {

// Boolean matrix multiplication by per-entry Grover OR over the inner
// product indicator vector z_k = A[i][k] AND B[k][j], simulated exactly.
// iterations < 0 asks for the best per-entry count derived from the known
// overlap (the idealized exact-count schedule); otherwise the fixed count
// is used everywhere.
struct BmmOptions {
  int iterations = -1;
  qts::qsim::SimLimits limits{};
  double success_tol = 1e-9;
};

struct BmmEntryStat {
  std::size_t row = 0, col = 0;
  std::size_t overlap = 0;     // ones of the indicator vector
  std::size_t iterations = 0;
  double p_correct = 0.0;      // exact probability the claimed bit is right
};

struct BmmReport {
  algebra::BoolMatrix computed;   // most likely claim per entry
  std::uint64_t grover_queries = 0;   // one query per Grover iterate
  std::uint64_t readout_queries = 0;  // one claim-readout query per entry
  std::size_t error_count = 0;        // entries with p_correct < 1 - tol
  double min_p_correct = 1.0;
  std::vector<BmmEntryStat> entries;
};

BmmReport grover_bmm(const algebra::BoolMatrix& a, const algebra::BoolMatrix& b,
                     const BmmOptions& options = {});

// Boolean matrix-vector product for sparse x: repeated Grover search finds
// the ones of x (found indices drop out of the search space), then A.x is
// assembled classically from the recorded support with zero further queries.
// Each round follows its majority branch; the minority mass is recorded as
// the round's error probability (an undetected one, when ones remain).
struct SparseMvRound {
  std::size_t search_size = 0, marked = 0, iterations = 0;
  double p_detect = 0.0;
  std::optional<std::size_t> found;
  double branch_error = 0.0;
};

struct SparseMvReport {
  std::vector<std::uint8_t> product;
  std::vector<std::size_t> support;
  std::vector<SparseMvRound> rounds;
  std::uint64_t search_queries = 0;
  std::uint64_t output_queries = 0;  // stays 0: the output phase is query-free
  bool support_exact = false;
};

SparseMvReport sparse_mv(const algebra::BoolMatrix& a, std::span<const std::uint8_t> x,
                         std::size_t weight_budget, const qts::qsim::SimLimits& limits = {});

}  // namespace qts::coloring
