#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qts/algebra/prime_field.hpp"

namespace qts::algebra {

// Input alphabet D, a subset of Z_p of size d >= 2, together with its
// enumeration nu: D -> {0, ..., d-1} in sorted order. The enumeration is the
// one used in query phases, so it must be shared by everything that touches
// oracle registers.
class Alphabet {
 public:
  Alphabet(PrimeField field, std::vector<std::uint64_t> elements);

  // The alphabet {0, 1, ..., d-1} inside Z_p.
  static Alphabet first_d(const PrimeField& field, std::size_t d);

  const PrimeField& field() const { return field_; }
  std::size_t size() const { return elems_.size(); }
  std::uint64_t value(std::size_t index) const;
  std::size_t index_of(std::uint64_t value) const;  // throws when absent
  bool contains(std::uint64_t value) const;
  std::span<const std::uint64_t> elements() const { return elems_; }

  bool operator==(const Alphabet& o) const {
    return field_ == o.field_ && elems_ == o.elems_;
  }

 private:
  PrimeField field_;
  std::vector<std::uint64_t> elems_;  // sorted, distinct, each < p
};

}  // namespace qts::algebra
