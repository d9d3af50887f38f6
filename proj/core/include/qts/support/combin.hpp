#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace qts {

// First k-subset of {0, ..., n-1} in lexicographic order: (0, 1, ..., k-1).
inline std::vector<std::size_t> first_subset(std::size_t k) {
  std::vector<std::size_t> c(k);
  std::iota(c.begin(), c.end(), std::size_t{0});
  return c;
}

// Advance a sorted k-subset of {0, ..., n-1} to its lexicographic successor.
// Returns false once the last subset has been passed.
inline bool next_subset(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  if (k == 0) return false;
  std::size_t i = k;
  while (i-- > 0) {
    if (c[i] + (k - i) < n) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// C(n, k), saturated at cap.
inline std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 v = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    v = v * (n - k + i) / i;
    if (v > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace qts
