#include "qts/algebra/alphabet.hpp"

#include <algorithm>
#include <stdexcept>

namespace qts::algebra {

Alphabet::Alphabet(PrimeField field, std::vector<std::uint64_t> elements)
    : field_(field), elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end());
  if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end()) {
    throw std::invalid_argument("Alphabet: duplicate elements");
  }
  if (elems_.size() < 2) {
    throw std::invalid_argument("Alphabet: need at least two elements");
  }
  if (!elems_.empty() && elems_.back() >= field_.modulus()) {
    throw std::invalid_argument("Alphabet: element outside Z_p");
  }
}

Alphabet Alphabet::first_d(const PrimeField& field, std::size_t d) {
  if (d > field.modulus()) {
    throw std::invalid_argument("Alphabet: d exceeds field size");
  }
  std::vector<std::uint64_t> elems(d);
  for (std::size_t i = 0; i < d; ++i) elems[i] = i;
  return Alphabet(field, std::move(elems));
}

std::uint64_t Alphabet::value(std::size_t index) const {
  if (index >= elems_.size()) throw std::invalid_argument("Alphabet: index out of range");
  return elems_[index];
}

std::size_t Alphabet::index_of(std::uint64_t value) const {
  const auto it = std::lower_bound(elems_.begin(), elems_.end(), value);
  if (it == elems_.end() || *it != value) {
    throw std::invalid_argument("Alphabet: value not in D");
  }
  return static_cast<std::size_t>(it - elems_.begin());
}

bool Alphabet::contains(std::uint64_t value) const {
  return std::binary_search(elems_.begin(), elems_.end(), value);
}

}  // namespace qts::algebra
