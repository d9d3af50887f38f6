#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qts/algebra/bool_matrix.hpp"

namespace qts::reductions {

// Random row-sparse Boolean matrix: each row has exactly n/(2k) ones at
// uniform positions. The certificate samples (or exhausts) row sets I of
// size k and counts, per row j in I, the ones of row j that are unique in
// their column within A_I; row j is good for I when that count is at least
// n/(6k). A set passes when at least k/2 of its rows are good.
struct KsdwRowSetResult {
  std::vector<std::size_t> rows;
  std::size_t good_rows = 0;
  bool passes = false;
};

struct KsdwCertificate {
  std::size_t n = 0, k = 0, row_weight = 0;
  bool exhaustive = false;
  std::uint64_t sets_checked = 0, sets_passing = 0;
  std::vector<KsdwRowSetResult> failing_sets;
};

struct KsdwMatrix {
  algebra::BoolMatrix matrix;
  KsdwCertificate certificate;
};

KsdwMatrix ksdw_matrix(std::size_t n, std::size_t k, std::uint64_t seed,
                       std::uint64_t cert_budget = 20'000);

// Number of rows of `row_set` that are good for it (unique-ones count times
// 6k is at least n).
std::size_t ksdw_good_rows(const algebra::BoolMatrix& a, std::span<const std::size_t> row_set);

// Vertical stack of ksdw blocks for k_i = the smallest admissible weight
// parameter at least S_i = 2^i log2 n (admissible: 2 k | n), deduplicated.
// Total rows stay at or below n log2 n.
struct StackedBlock {
  std::size_t k = 0, s = 0, first_row = 0, rows = 0;
};

struct StackedMatrix {
  algebra::BoolMatrix matrix;
  std::vector<StackedBlock> blocks;
};

StackedMatrix stacked_hard_matrix(std::size_t n, std::uint64_t seed);

// |A|_{1/2} = sum over rows of sqrt(row weight); the query cost of
// row-by-row Grover matrix-vector multiplication.
double half_norm(const algebra::BoolMatrix& a);

}  // namespace qts::reductions
