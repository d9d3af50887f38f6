#include "qts/algebra/prime_field.hpp"

#include <stdexcept>

#include "qts/support/errors.hpp"

namespace qts::algebra {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

PrimeField::PrimeField(std::uint64_t modulus) : p_(modulus) {
  if (!is_prime(modulus)) {
    throw std::invalid_argument("PrimeField: modulus " + std::to_string(modulus) +
                                " is not prime");
  }
}

std::uint64_t PrimeField::add(std::uint64_t a, std::uint64_t b) const {
  const std::uint64_t s = a + b;
  return s >= p_ ? s - p_ : s;
}

std::uint64_t PrimeField::sub(std::uint64_t a, std::uint64_t b) const {
  return a >= b ? a - b : a + p_ - b;
}

std::uint64_t PrimeField::neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }

std::uint64_t PrimeField::mul(std::uint64_t a, std::uint64_t b) const {
  return mulmod(a, b, p_);
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  return powmod(a, e, p_);
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw singular_error("PrimeField: no inverse of 0");
  return powmod(a, p_ - 2, p_);
}

// Deterministic Miller-Rabin; the base set below is exact for all 64-bit n.
bool PrimeField::is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace qts::algebra
