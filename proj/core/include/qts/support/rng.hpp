#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace qts {

using Rng = std::mt19937_64;

// SplitMix64 finalizer, used to decorrelate seeds and stream ids.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline Rng make_rng(std::uint64_t seed) { return Rng(mix64(seed)); }

// Independent stream for (seed, stream), e.g. one per Monte-Carlo trial.
inline Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  return Rng(mix64(mix64(seed) + 0x632be59bd9b4e019ULL * mix64(stream)));
}

// Uniform in {0, ..., n-1}. Modulo bias is irrelevant at the sizes used here.
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

// Uniform in [0, 1).
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Box-Muller, one value per call.
inline double standard_normal(Rng& rng) {
  const double u = 1.0 - uniform_unit(rng);  // (0, 1]
  const double v = uniform_unit(rng);
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * 3.14159265358979323846 * v);
}

// k distinct values from {0, ..., n-1}, sorted ascending.
inline std::vector<std::size_t> sample_distinct(Rng& rng, std::size_t n, std::size_t k) {
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(pool[i], pool[i + uniform_index(rng, n - i)]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace qts
