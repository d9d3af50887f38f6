#include "qts/reductions/hard_matrices.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "qts/support/combin.hpp"
#include "qts/support/rng.hpp"

namespace qts::reductions {

std::size_t ksdw_good_rows(const algebra::BoolMatrix& a, std::span<const std::size_t> row_set) {
  const std::size_t n = a.cols();
  const std::size_t k = row_set.size();
  std::size_t good = 0;
  for (std::size_t idx = 0; idx < k; ++idx) {
    const std::size_t j = row_set[idx];
    std::size_t unique_ones = 0;
    for (std::size_t col = 0; col < n; ++col) {
      if (!a(j, col)) continue;
      bool unique = true;
      for (std::size_t other : row_set) {
        if (other != j && a(other, col)) {
          unique = false;
          break;
        }
      }
      if (unique) ++unique_ones;
    }
    // good iff unique_ones >= n / (6k), kept exact in integers
    if (unique_ones * 6 * k >= n) ++good;
  }
  return good;
}

KsdwMatrix ksdw_matrix(std::size_t n, std::size_t k, std::uint64_t seed,
                       std::uint64_t cert_budget) {
  if (k == 0 || n == 0 || n % (2 * k) != 0) {
    throw std::invalid_argument("ksdw_matrix: need 2k | n");
  }
  const std::size_t weight = n / (2 * k);

  algebra::BoolMatrix a(n, n);
  {
    Rng rng = make_rng(seed, 0);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c : sample_distinct(rng, n, weight)) a.set(r, c, true);
    }
  }

  KsdwCertificate cert;
  cert.n = n;
  cert.k = k;
  cert.row_weight = weight;
  const auto check_set = [&](const std::vector<std::size_t>& rows) {
    const std::size_t good = ksdw_good_rows(a, rows);
    const bool passes = 2 * good >= k;
    ++cert.sets_checked;
    if (passes) {
      ++cert.sets_passing;
    } else if (cert.failing_sets.size() < 32) {
      cert.failing_sets.push_back(KsdwRowSetResult{rows, good, passes});
    }
  };
  if (cert_budget > 0) {
    if (binomial_capped(n, k, cert_budget) <= cert_budget) {
      cert.exhaustive = true;
      std::vector<std::size_t> rows = first_subset(k);
      do {
        check_set(rows);
      } while (next_subset(rows, n));
    } else {
      cert.exhaustive = false;
      Rng rng = make_rng(seed, 1);
      const std::size_t samples = 500;
      for (std::size_t t = 0; t < samples; ++t) check_set(sample_distinct(rng, n, k));
    }
  }
  return KsdwMatrix{std::move(a), std::move(cert)};
}

StackedMatrix stacked_hard_matrix(std::size_t n, std::uint64_t seed) {
  if (n < 4 || !std::has_single_bit(n)) {
    throw std::invalid_argument("stacked_hard_matrix: n must be a power of two, n >= 4");
  }
  const std::size_t log_n = static_cast<std::size_t>(std::countr_zero(n));

  // Per target S_i = 2^i log2 n: k_i = smallest k >= S_i with 2k | n.
  // Stop once no admissible k remains; drop repeats.
  std::vector<std::pair<std::size_t, std::size_t>> plan;  // (k, S)
  for (std::size_t i = 0;; ++i) {
    const std::size_t s = (std::size_t{1} << i) * log_n;
    std::size_t k = 0;
    for (std::size_t cand = 1; 2 * cand <= n; ++cand) {
      if (n % (2 * cand) == 0 && cand >= s) {
        k = cand;
        break;
      }
    }
    if (k == 0) break;
    if (plan.empty() || plan.back().first != k) plan.push_back({k, s});
    if (2 * k == n) break;
  }
  if (plan.empty()) throw std::invalid_argument("stacked_hard_matrix: no admissible block for n");

  StackedMatrix out{algebra::BoolMatrix(plan.size() * n, n), {}};
  std::size_t row0 = 0;
  for (std::size_t b = 0; b < plan.size(); ++b) {
    const KsdwMatrix block = ksdw_matrix(n, plan[b].first, mix64(seed) + b, /*cert_budget=*/0);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) out.matrix.set(row0 + r, c, block.matrix(r, c));
    out.blocks.push_back(StackedBlock{plan[b].first, plan[b].second, row0, n});
    row0 += n;
  }
  return out;
}

double half_norm(const algebra::BoolMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    s += std::sqrt(static_cast<double>(a.row_weight(r)));
  }
  return s;
}

}  // namespace qts::reductions
