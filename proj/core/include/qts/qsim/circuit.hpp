#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qts/algebra/field_matrix.hpp"
#include "qts/qsim/operators.hpp"

namespace qts::qsim {

// One output claim: "output `output` of f equals `value`".
struct Claim {
  std::size_t output = 0;
  std::uint64_t value = 0;
  bool operator==(const Claim&) const = default;
};

// Evaluates the target function on a full standard-basis assignment (field
// values, length n).
using ProblemFn = std::function<std::vector<std::uint64_t>(std::span<const std::uint64_t>)>;

// Serializable problem descriptors; `custom` carries a bare function and
// cannot be serialized.
struct ProblemSpec {
  enum class Kind { none, matvec, boolean_or, identity, custom };
  Kind kind = Kind::none;
  std::optional<algebra::FieldMatrix> matrix;  // matvec only
  ProblemFn make_fn() const;
};

// A query circuit U_T Q U_{T-1} ... U_1 Q U_0 where every U_t is an
// input-independent unitary on the (i, p, w) registers and Q is the oracle
// of the chosen run mode. The output map q sends a measured work value to an
// ordered claim list.
class QueryCircuit {
 public:
  QueryCircuit(RegisterLayout layout, std::vector<CMatrix> unitaries,
               std::vector<std::vector<Claim>> claims = {}, ProblemSpec problem = {},
               ProblemFn custom_fn = {}, double unitarity_tol = 1e-10);

  const RegisterLayout& layout() const { return layout_; }
  std::size_t query_count() const { return unitaries_.size() - 1; }
  const CMatrix& unitary(std::size_t t) const { return unitaries_[t]; }
  std::span<const Claim> claims_for(std::size_t w) const;
  std::size_t max_claims() const;
  bool has_claims() const { return !claims_.empty(); }
  bool has_problem() const { return static_cast<bool>(fn_); }
  const ProblemSpec& problem() const { return problem_; }
  const std::vector<std::vector<Claim>>& claim_table() const { return claims_; }
  std::vector<std::uint64_t> evaluate(std::span<const std::uint64_t> x) const;

 private:
  RegisterLayout layout_;
  std::vector<CMatrix> unitaries_;
  std::vector<std::vector<Claim>> claims_;
  ProblemSpec problem_;
  ProblemFn fn_;
};

enum class RunMode { standard_purified, recording };

// standard_purified: |0>_{i,p,w} (x) d^{-n/2} sum_{x in D^n} |x>
// recording:         |0>_{i,p,w} (x) |bot...bot>
SparseState initial_state(const RegisterLayout& layout, RunMode mode);

SparseState run_circuit(const QueryCircuit& c, RunMode mode);

// || psi_T - S phi_T ||.
double recording_equivalence_residual(const QueryCircuit& c);

struct SuccessProbability {
  double value = 0.0;
  // labels whose work value produced fewer than k claims (they contribute 0)
  std::size_t short_claim_labels = 0;
};

// Squared norm of the projection onto labels whose first k claims hold for
// f(x). Labels containing bot are projected out; apply S first to a
// recording-mode state. k = 0 keeps every bot-free label.
SuccessProbability success_probability(const SparseState& s, const QueryCircuit& c, std::size_t k);

// Fixed-input run: the state is a dense vector over the (i, p, w) space and
// the oracle phases come from the fixed assignment (codes, no bot).
std::vector<cd> run_fixed(const QueryCircuit& c, std::span<const std::uint8_t> x_codes);
SuccessProbability success_probability_fixed(const QueryCircuit& c, std::span<const cd> final_ipw,
                                             std::span<const std::uint8_t> x_codes, std::size_t k);

}  // namespace qts::qsim
