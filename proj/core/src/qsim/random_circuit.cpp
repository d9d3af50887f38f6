#include "qts/qsim/random_circuit.hpp"

namespace qts::qsim {

std::uint64_t smallest_prime_geq(std::uint64_t n) {
  std::uint64_t p = n < 2 ? 2 : n;
  while (!algebra::PrimeField::is_prime(p)) ++p;
  return p;
}

QueryCircuit random_circuit(const RandomCircuitSpec& spec, Rng& rng) {
  const algebra::PrimeField field(smallest_prime_geq(spec.d));
  RegisterLayout layout(algebra::Alphabet::first_d(field, spec.d), spec.n, spec.work_dim,
                        spec.limits);
  std::vector<CMatrix> unitaries;
  unitaries.reserve(spec.queries + 1);
  for (std::size_t t = 0; t <= spec.queries; ++t) {
    unitaries.push_back(random_unitary(layout.ipw_dim(), rng));
  }
  return QueryCircuit(std::move(layout), std::move(unitaries));
}

}  // namespace qts::qsim
