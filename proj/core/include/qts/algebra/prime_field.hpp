#pragma once

#include <cstdint>

namespace qts::algebra {

// Exact arithmetic in Z_p for a prime modulus p. Values are kept reduced to
// [0, p) at all times.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t modulus);

  std::uint64_t modulus() const { return p_; }
  std::uint64_t reduce(std::uint64_t v) const { return v % p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;  // throws singular_error when a == 0

  bool operator==(const PrimeField&) const = default;

  static bool is_prime(std::uint64_t n);

 private:
  std::uint64_t p_;
};

}  // namespace qts::algebra
