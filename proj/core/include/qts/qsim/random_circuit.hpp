#pragma once

#include "qts/qsim/circuit.hpp"
#include "qts/support/rng.hpp"

namespace qts::qsim {

struct RandomCircuitSpec {
  std::size_t n = 2;
  std::size_t d = 2;
  std::size_t queries = 2;
  std::size_t work_dim = 4;
  SimLimits limits{};
};

// T+1 Haar-ish random work unitaries around T oracle calls; no claims.
// The alphabet is {0, ..., d-1} in Z_p for the smallest prime p >= d.
QueryCircuit random_circuit(const RandomCircuitSpec& spec, Rng& rng);

std::uint64_t smallest_prime_geq(std::uint64_t n);

}  // namespace qts::qsim
