#pragma once

#include <span>

#include "qts/qsim/circuit.hpp"

namespace qts::qsim {

// Grover machinery for OR / search over the input bits in the phase-query
// model (d = 2). The circuit runs `iterations` Grover iterates (one query
// each: phase marking of the 1-entries, then diffusion over the index
// register), then spends one more query moving the bit at the measured index
// into the work register via phase kickback through the p register. The
// claimed OR value is read from w; the measured index always carries a true
// 1 when w = 1.
QueryCircuit grover_or_circuit(std::size_t n_bits, std::size_t iterations, SimLimits limits = {});

// Same, but the index superposition and diffusion act only on `search`
// (0-based register indices); used when part of the input is already known.
QueryCircuit grover_search_circuit(std::size_t n_bits, std::size_t iterations,
                                   std::span<const std::size_t> search, SimLimits limits = {});

// Iteration count maximizing success for `marked` ones among `search_size`
// candidates; exact (success 1) when sin((2r+1) theta) = 1 has an integer
// solution.
std::size_t best_grover_iterations(std::size_t search_size, std::size_t marked);
bool grover_iterations_exact(std::size_t search_size, std::size_t marked, std::size_t r);

struct GroverStats {
  double p_claim_correct = 0.0;  // P(claimed OR equals the true OR of x)
  double p_detect = 0.0;         // P(w = 1); the measured index is then a true 1
  std::vector<double> p_found;   // per register j: P(index = j and w = 1)
};

GroverStats grover_stats(const QueryCircuit& c, std::span<const std::uint8_t> x_codes);

}  // namespace qts::qsim
