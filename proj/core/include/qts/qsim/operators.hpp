#pragma once

#include "qts/qsim/cmatrix.hpp"
#include "qts/qsim/sparse_state.hpp"

namespace qts::qsim {

// How the phase oracle treats a bot at the queried register. `standard`
// refuses it (the query operator of the model is defined on standard-basis
// inputs only); `extended` applies no phase there. The recording oracle uses
// the extended domain: that linear extension is the one whose composition
// S O S reproduces the single-query closed form.
enum class OracleDomain { standard, extended };

// |i,p,w,x> -> omega_d^{p nu(x_i)} |i,p,w,x>; identity when i = 0 or p = 0.
SparseState apply_phase_oracle(const SparseState& s, OracleDomain domain = OracleDomain::standard);

// S_1 on one register: swaps |bot> with the uniform superposition over D and
// fixes the d-1 phase-uniform vectors. Involutive.
SparseState apply_s1(const SparseState& s, std::size_t reg);

// S = I_{i,p,w} tensor S_1^{(x_1)} ... S_1^{(x_n)}.
SparseState apply_s(const SparseState& s);

// Recording query oracle R = S O S.
SparseState apply_recording_oracle(const SparseState& s);

// Dense unitary on the (i, p, w) registers; identity on the oracle registers.
SparseState apply_ipw_unitary(const SparseState& s, const CMatrix& u);

// Largest number of non-bot registers over the support.
std::size_t max_nonbot_support(const SparseState& s);

}  // namespace qts::qsim
