#pragma once

#include <string>

#include "qts/qsim/circuit.hpp"

namespace qts::qsim {

// JSON circuit description: layout, unitaries as real/imag pairs, oracle
// call count, claim table, problem descriptor. Circuits with a custom
// problem function cannot be serialized.
std::string circuit_to_json(const QueryCircuit& c);
QueryCircuit circuit_from_json(const std::string& text);

}  // namespace qts::qsim
