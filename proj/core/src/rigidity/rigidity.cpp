#include "qts/rigidity/rigidity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qts/support/combin.hpp"
#include "qts/support/errors.hpp"
#include "qts/support/rng.hpp"

namespace qts::rigidity {

std::size_t RigidityParams::k_prime() const {
  const double ck = c * static_cast<double>(k);
  const double rounded = std::round(ck);
  // Snap to the integer when c*k is one, so e.g. c = 1/3, k = 3 gives 1.
  if (std::abs(ck - rounded) < 1e-9) return static_cast<std::size_t>(rounded);
  return static_cast<std::size_t>(std::ceil(ck));
}

namespace {

void validate(const algebra::FieldMatrix& a, const RigidityParams& p) {
  if (p.k == 0 || p.k > a.rows()) throw std::invalid_argument("rigidity: k out of range");
  if (p.h == 0 || p.h > a.cols()) throw std::invalid_argument("rigidity: h out of range");
  if (!(p.c > 0.0) || p.c > 1.0) throw std::invalid_argument("rigidity: c must be in (0, 1]");
}

std::vector<std::size_t> complement(std::span<const std::size_t> removed, std::size_t n) {
  std::vector<std::size_t> keep;
  keep.reserve(n - removed.size());
  std::size_t t = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (t < removed.size() && removed[t] == c) {
      ++t;
    } else {
      keep.push_back(c);
    }
  }
  return keep;
}

}  // namespace

RigidityResult is_rigid(const algebra::FieldMatrix& a, const RigidityParams& params,
                        std::uint64_t budget) {
  validate(a, params);
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::size_t k_prime = params.k_prime();
  const std::size_t w_size = params.h - 1;

  const std::uint64_t cases = binomial_capped(m, params.k, budget) *
                              std::max<std::uint64_t>(1, binomial_capped(n, w_size, budget));
  if (binomial_capped(m, params.k, budget) > budget ||
      binomial_capped(n, w_size, budget) > budget || cases > budget) {
    throw budget_error("is_rigid: case count exceeds budget");
  }

  RigidityResult result;
  std::vector<std::size_t> rows = first_subset(params.k);
  do {
    std::vector<std::size_t> removed = first_subset(w_size);
    do {
      ++result.cases_checked;
      const auto keep = complement(removed, n);
      const std::size_t r = algebra::submatrix_rank(a, rows, keep);
      if (r < k_prime) {
        result.rigid = false;
        result.witness = RigidityWitness{rows, removed, r};
        return result;
      }
    } while (next_subset(removed, n));
  } while (next_subset(rows, m));
  result.rigid = true;
  return result;
}

ColumnPartition partition_columns(const algebra::FieldMatrix& a, std::span<const std::size_t> u,
                                  const RigidityParams& params) {
  validate(a, params);
  if (u.size() != params.k) throw std::invalid_argument("partition_columns: |U| must equal k");
  for (std::size_t r : u) {
    if (r >= a.rows()) throw std::invalid_argument("partition_columns: row out of range");
  }
  const std::size_t n = a.cols();
  const std::size_t k_prime = params.k_prime();
  const algebra::PrimeField& f = a.field();

  ColumnPartition partition;
  partition.k_prime = k_prime;
  std::vector<bool> removed(n, false);
  std::size_t removed_count = 0;

  while (removed_count < params.h) {
    // Fractional Gaussian elimination over A_{U, [n] \ W}, columns in index
    // order, rows by first usable pivot: the first k' pivot columns form
    // V_j, their pivot rows form U_j.
    std::vector<std::size_t> avail_rows(u.begin(), u.end());
    std::vector<std::vector<std::uint64_t>> work;  // |U| x (surviving columns)
    std::vector<std::size_t> col_ids;
    for (std::size_t c = 0; c < n; ++c) {
      if (!removed[c]) col_ids.push_back(c);
    }
    work.resize(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
      work[i].resize(col_ids.size());
      for (std::size_t j = 0; j < col_ids.size(); ++j) work[i][j] = a(u[i], col_ids[j]);
    }

    std::vector<std::size_t> pivot_rows, pivot_cols;
    std::size_t rank = 0;
    for (std::size_t j = 0; j < col_ids.size() && rank < k_prime; ++j) {
      std::size_t pr = rank;
      while (pr < u.size() && work[pr][j] == 0) ++pr;
      if (pr == u.size()) continue;
      std::swap(work[pr], work[rank]);
      std::swap(avail_rows[pr], avail_rows[rank]);
      const std::uint64_t inv = f.inv(work[rank][j]);
      for (std::size_t t = j; t < col_ids.size(); ++t) work[rank][t] = f.mul(work[rank][t], inv);
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (i == rank || work[i][j] == 0) continue;
        const std::uint64_t v = work[i][j];
        for (std::size_t t = j; t < col_ids.size(); ++t) {
          work[i][t] = f.sub(work[i][t], f.mul(v, work[rank][t]));
        }
      }
      pivot_rows.push_back(avail_rows[rank]);
      pivot_cols.push_back(col_ids[j]);
      ++rank;
    }
    if (rank < k_prime) {
      throw std::runtime_error(
          "partition_columns: rank dropped below ceil(c k) after removing " +
          std::to_string(removed_count) + " columns; the matrix is not (k,h,c)-rigid");
    }
    std::sort(pivot_rows.begin(), pivot_rows.end());
    std::sort(pivot_cols.begin(), pivot_cols.end());
    for (std::size_t c : pivot_cols) {
      removed[c] = true;
      ++removed_count;
    }
    partition.parts.push_back(ColumnPartition::Part{std::move(pivot_rows), std::move(pivot_cols)});
  }
  return partition;
}

BucketIndex bucket_for_query_set(std::span<const std::size_t> query_set,
                                 const ColumnPartition& partition, double alpha) {
  if (partition.parts.empty()) throw std::invalid_argument("bucket: empty partition");
  if (!(alpha > 0.0) || alpha >= 1.0) throw std::invalid_argument("bucket: alpha must be in (0,1)");
  const std::size_t k_prime = partition.k_prime;
  const std::size_t k_pp = static_cast<std::size_t>(std::floor(alpha * static_cast<double>(k_prime) + 1e-9));
  std::size_t h = 0;
  for (const auto& part : partition.parts) h += part.cols.size();
  const std::size_t max_i = static_cast<std::size_t>(std::floor(alpha * static_cast<double>(h) + 1e-9));
  if (query_set.size() > max_i) {
    throw std::invalid_argument("bucket: |I| exceeds floor(alpha h)");
  }

  for (std::size_t j = 0; j < partition.parts.size(); ++j) {
    const auto& cols = partition.parts[j].cols;
    std::vector<std::size_t> hit_positions;
    for (std::size_t pos = 0; pos < cols.size(); ++pos) {
      if (std::find(query_set.begin(), query_set.end(), cols[pos]) != query_set.end()) {
        hit_positions.push_back(pos);
      }
    }
    if (hit_positions.size() > k_pp) continue;
    // Pad with the lowest unused positions up to exactly k''.
    BucketIndex bucket;
    bucket.j = j;
    bucket.lambda = hit_positions;
    for (std::size_t pos = 0; pos < cols.size() && bucket.lambda.size() < k_pp; ++pos) {
      if (std::find(hit_positions.begin(), hit_positions.end(), pos) == hit_positions.end()) {
        bucket.lambda.push_back(pos);
      }
    }
    std::sort(bucket.lambda.begin(), bucket.lambda.end());
    return bucket;
  }
  throw std::runtime_error("bucket: no part with small enough overlap (partition invalid?)");
}

std::vector<std::size_t> bucket_surviving_columns(const ColumnPartition& partition,
                                                  const BucketIndex& bucket) {
  const auto& cols = partition.parts.at(bucket.j).cols;
  std::vector<std::size_t> out;
  for (std::size_t pos = 0; pos < cols.size(); ++pos) {
    if (std::find(bucket.lambda.begin(), bucket.lambda.end(), pos) == bucket.lambda.end()) {
      out.push_back(cols[pos]);
    }
  }
  return out;
}

FractionEstimate estimate_rigid_fraction(MatrixSampler sampler, std::size_t n,
                                         const algebra::Alphabet& alphabet,
                                         const RigidityParams& params, std::size_t trials,
                                         std::uint64_t seed, std::uint64_t budget) {
  if (trials == 0) throw std::invalid_argument("estimate_rigid_fraction: trials must be positive");
  const algebra::PrimeField& f = alphabet.field();
  FractionEstimate est;
  est.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = make_rng(seed, t);
    algebra::FieldMatrix a(f, n, n);
    if (sampler == MatrixSampler::uniform) {
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          a.set(r, c, alphabet.value(uniform_index(rng, alphabet.size())));
        }
    } else {
      // Diagonal-constant: 2n-1 free values, A[r][c] = diag[r - c + n - 1].
      std::vector<std::uint64_t> diag(2 * n - 1);
      for (auto& v : diag) v = alphabet.value(uniform_index(rng, alphabet.size()));
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a.set(r, c, diag[r - c + n - 1]);
    }
    if (is_rigid(a, params, budget).rigid) ++est.hits;
  }
  const double p_hat = static_cast<double>(est.hits) / static_cast<double>(trials);
  const double z = 1.959963984540054;  // 95%
  const double nn = static_cast<double>(trials);
  const double denom = 1.0 + z * z / nn;
  const double center = (p_hat + z * z / (2.0 * nn)) / denom;
  const double half =
      z * std::sqrt(p_hat * (1.0 - p_hat) / nn + z * z / (4.0 * nn * nn)) / denom;
  est.fraction = p_hat;
  est.ci_low = std::max(0.0, center - half);
  est.ci_high = std::min(1.0, center + half);
  return est;
}

}  // namespace qts::rigidity
