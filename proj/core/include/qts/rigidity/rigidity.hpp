#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qts/algebra/alphabet.hpp"
#include "qts/algebra/field_matrix.hpp"

namespace qts::rigidity {

// (k, h, c)-rigidity: every k-row submatrix keeps rank >= ceil(c k) after
// removing any fewer than h columns. (k, h)-rigid means c = 1.
struct RigidityParams {
  std::size_t k = 1;
  std::size_t h = 1;
  double c = 1.0;
  std::size_t k_prime() const;  // ceil(c * k)
};

struct RigidityWitness {
  std::vector<std::size_t> rows;          // the row set U
  std::vector<std::size_t> removed_cols;  // the removed set W, |W| < h
  std::size_t rank = 0;                   // rank of A_{U, [n] \ W} < k'
};

struct RigidityResult {
  bool rigid = false;
  std::optional<RigidityWitness> witness;
  std::uint64_t cases_checked = 0;
};

inline constexpr std::uint64_t kDefaultRigidityBudget = 5'000'000;

// Brute force over all row sets of size k and removal sets of size h-1
// (removing fewer columns never lowers the rank further).
RigidityResult is_rigid(const algebra::FieldMatrix& a, const RigidityParams& params,
                        std::uint64_t budget = kDefaultRigidityBudget);

struct ColumnPartition {
  struct Part {
    std::vector<std::size_t> rows;  // U_j, |U_j| = k'
    std::vector<std::size_t> cols;  // V_j, |V_j| = k', pairwise disjoint
  };
  std::vector<Part> parts;
  std::size_t k_prime = 0;
};

// Greedy construction: while the removed set W has size < h, pull a full-rank
// k' x k' submatrix of A_{U, [n] \ W} and add its columns to W. Produces
// exactly ceil(h / k') parts; pivots are chosen lowest-index first, so the
// output is deterministic. Rigidity of A at `params` guarantees success and
// is the caller's responsibility (certify with is_rigid when in doubt).
ColumnPartition partition_columns(const algebra::FieldMatrix& a, std::span<const std::size_t> u,
                                  const RigidityParams& params);

struct BucketIndex {
  std::size_t j = 0;                 // part index (0-based)
  std::vector<std::size_t> lambda;   // positions within V_j, |lambda| = floor(alpha k')
};

// For |I| <= floor(alpha h): a pair (j, lambda) with I disjoint from V_j with
// the lambda-indexed elements removed. Lowest admissible j; lambda covers
// the positions of I inside V_j, padded with the lowest unused positions.
BucketIndex bucket_for_query_set(std::span<const std::size_t> query_set,
                                 const ColumnPartition& partition, double alpha);

// V_j minus its lambda-indexed elements.
std::vector<std::size_t> bucket_surviving_columns(const ColumnPartition& partition,
                                                  const BucketIndex& bucket);

enum class MatrixSampler { uniform, toeplitz };

struct FractionEstimate {
  double fraction = 0.0;
  double ci_low = 0.0, ci_high = 0.0;  // Wilson 95% interval
  std::size_t trials = 0, hits = 0;
};

// Monte-Carlo fraction of sampled n x n matrices with entries from D that
// are rigid at `params`. The toeplitz sampler draws diagonal-constant
// matrices (2n - 1 free values).
FractionEstimate estimate_rigid_fraction(MatrixSampler sampler, std::size_t n,
                                         const algebra::Alphabet& alphabet,
                                         const RigidityParams& params, std::size_t trials,
                                         std::uint64_t seed,
                                         std::uint64_t budget = kDefaultRigidityBudget);

}  // namespace qts::rigidity
