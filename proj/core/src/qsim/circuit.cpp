#include "qts/qsim/circuit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace qts::qsim {

ProblemFn ProblemSpec::make_fn() const {
  switch (kind) {
    case Kind::none:
    case Kind::custom:
      return {};
    case Kind::matvec: {
      if (!matrix) throw std::invalid_argument("ProblemSpec: matvec needs a matrix");
      const algebra::FieldMatrix a = *matrix;
      return [a](std::span<const std::uint64_t> x) { return algebra::mat_vec(a, x); };
    }
    case Kind::boolean_or:
      return [](std::span<const std::uint64_t> x) {
        std::uint64_t any = 0;
        for (std::uint64_t v : x) any |= (v != 0 ? 1ULL : 0ULL);
        return std::vector<std::uint64_t>{any};
      };
    case Kind::identity:
      return [](std::span<const std::uint64_t> x) {
        return std::vector<std::uint64_t>(x.begin(), x.end());
      };
  }
  return {};
}

QueryCircuit::QueryCircuit(RegisterLayout layout, std::vector<CMatrix> unitaries,
                           std::vector<std::vector<Claim>> claims, ProblemSpec problem,
                           ProblemFn custom_fn, double unitarity_tol)
    : layout_(std::move(layout)),
      unitaries_(std::move(unitaries)),
      claims_(std::move(claims)),
      problem_(std::move(problem)) {
  if (unitaries_.empty()) {
    throw std::invalid_argument("QueryCircuit: need at least the initial unitary U_0");
  }
  for (std::size_t t = 0; t < unitaries_.size(); ++t) {
    const CMatrix& u = unitaries_[t];
    if (u.rows() != layout_.ipw_dim() || u.cols() != layout_.ipw_dim()) {
      throw std::invalid_argument("QueryCircuit: U_" + std::to_string(t) +
                                  " does not match the (i,p,w) dimension");
    }
    if (!is_unitary(u, unitarity_tol)) {
      throw std::invalid_argument("QueryCircuit: U_" + std::to_string(t) + " is not unitary");
    }
  }
  if (claims_.size() > layout_.work_dim()) {
    throw std::invalid_argument("QueryCircuit: claim table longer than the work dimension");
  }
  if (problem_.kind == ProblemSpec::Kind::custom) {
    fn_ = std::move(custom_fn);
    if (!fn_) throw std::invalid_argument("QueryCircuit: custom problem without a function");
  } else {
    fn_ = problem_.make_fn();
  }
}

std::span<const Claim> QueryCircuit::claims_for(std::size_t w) const {
  if (w >= claims_.size()) return {};
  return claims_[w];
}

std::size_t QueryCircuit::max_claims() const {
  std::size_t m = 0;
  for (const auto& c : claims_) m = std::max(m, c.size());
  return m;
}

std::vector<std::uint64_t> QueryCircuit::evaluate(std::span<const std::uint64_t> x) const {
  if (!fn_) throw std::invalid_argument("QueryCircuit: no problem descriptor");
  return fn_(x);
}

SparseState initial_state(const RegisterLayout& layout, RunMode mode) {
  SparseState s(layout);
  const std::size_t n = layout.n_inputs();
  const std::size_t d = layout.d();
  if (mode == RunMode::recording) {
    BasisLabel l;
    l.x.assign(n, layout.bot_code());
    s.set(layout.pack(l), 1.0);
    return s;
  }
  // Uniform superposition over D^n with amplitude d^{-n/2}.
  const double amp = std::pow(static_cast<double>(d), -0.5 * static_cast<double>(n));
  std::vector<std::uint8_t> codes(n, 0);
  while (true) {
    std::uint64_t key = 0;
    for (std::size_t j = 0; j < n; ++j) key += static_cast<std::uint64_t>(codes[j]) * layout.x_stride(j);
    s.set(key, amp);
    std::size_t j = 0;
    while (j < n) {
      if (++codes[j] < d) break;
      codes[j] = 0;
      ++j;
    }
    if (j == n) break;
  }
  return s;
}

SparseState run_circuit(const QueryCircuit& c, RunMode mode) {
  SparseState s = initial_state(c.layout(), mode);
  s = apply_ipw_unitary(s, c.unitary(0));
  for (std::size_t t = 1; t <= c.query_count(); ++t) {
    s = mode == RunMode::recording ? apply_recording_oracle(s)
                                   : apply_phase_oracle(s, OracleDomain::standard);
    s = apply_ipw_unitary(s, c.unitary(t));
  }
  return s;
}

double recording_equivalence_residual(const QueryCircuit& c) {
  const SparseState psi = run_circuit(c, RunMode::standard_purified);
  const SparseState s_phi = apply_s(run_circuit(c, RunMode::recording));
  return SparseState::distance(psi, s_phi);
}

namespace {

// Checks the first k claims of q(w) against the outputs f(x).
bool claims_hold(std::span<const Claim> claims, std::span<const std::uint64_t> outputs,
                 std::size_t k) {
  for (std::size_t t = 0; t < k; ++t) {
    const Claim& cl = claims[t];
    if (cl.output >= outputs.size()) return false;
    if (outputs[cl.output] != cl.value) return false;
  }
  return true;
}

}  // namespace

SuccessProbability success_probability(const SparseState& s, const QueryCircuit& c,
                                       std::size_t k) {
  const RegisterLayout& L = s.layout();
  SuccessProbability result;
  if (k == 0) {
    for (const auto& [key, a] : s.table()) {
      bool has_bot = false;
      for (std::size_t j = 0; j < L.n_inputs() && !has_bot; ++j) {
        has_bot = L.x_code(key, j) == L.bot_code();
      }
      if (!has_bot) result.value += std::norm(a);
    }
    return result;
  }
  if (!c.has_problem() || !c.has_claims()) {
    throw std::invalid_argument("success_probability: circuit lacks a problem or claim table");
  }
  const std::size_t m = L.ipw_dim();
  // Cache f(x) per oracle-register assignment.
  std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> outputs_by_x;
  std::vector<std::uint64_t> values(L.n_inputs());
  for (const auto& [key, a] : s.table()) {
    bool has_bot = false;
    for (std::size_t j = 0; j < L.n_inputs() && !has_bot; ++j) {
      has_bot = L.x_code(key, j) == L.bot_code();
    }
    if (has_bot) continue;
    const std::size_t w = L.w_of(key);
    const auto claims = c.claims_for(w);
    if (claims.size() < k) {
      ++result.short_claim_labels;
      continue;
    }
    const std::uint64_t xpart = key / m;
    auto it = outputs_by_x.find(xpart);
    if (it == outputs_by_x.end()) {
      for (std::size_t j = 0; j < L.n_inputs(); ++j) {
        values[j] = L.alphabet().value(L.x_code(key, j));
      }
      it = outputs_by_x.emplace(xpart, c.evaluate(values)).first;
    }
    if (claims_hold(claims, it->second, k)) result.value += std::norm(a);
  }
  return result;
}

std::vector<cd> run_fixed(const QueryCircuit& c, std::span<const std::uint8_t> x_codes) {
  const RegisterLayout& L = c.layout();
  if (x_codes.size() != L.n_inputs()) {
    throw std::invalid_argument("run_fixed: wrong number of input codes");
  }
  for (std::uint8_t code : x_codes) {
    if (code >= L.d()) throw std::invalid_argument("run_fixed: code out of alphabet range");
  }
  const std::size_t m = L.ipw_dim();
  const std::size_t dw = L.d() * L.work_dim();
  std::vector<cd> v(m, cd{});
  v[0] = 1.0;
  v = apply_matrix(c.unitary(0), v);
  for (std::size_t t = 1; t <= c.query_count(); ++t) {
    for (std::size_t idx = 0; idx < m; ++idx) {
      const std::size_t i = idx / dw;
      const std::size_t p = (idx / L.work_dim()) % L.d();
      if (i >= 1 && p >= 1) v[idx] *= L.query_phase(p, x_codes[i - 1]);
    }
    v = apply_matrix(c.unitary(t), v);
  }
  return v;
}

SuccessProbability success_probability_fixed(const QueryCircuit& c, std::span<const cd> final_ipw,
                                             std::span<const std::uint8_t> x_codes,
                                             std::size_t k) {
  const RegisterLayout& L = c.layout();
  SuccessProbability result;
  if (k == 0) {
    for (const cd& a : final_ipw) result.value += std::norm(a);
    return result;
  }
  if (!c.has_problem() || !c.has_claims()) {
    throw std::invalid_argument("success_probability_fixed: circuit lacks a problem or claims");
  }
  std::vector<std::uint64_t> values(L.n_inputs());
  for (std::size_t j = 0; j < L.n_inputs(); ++j) values[j] = L.alphabet().value(x_codes[j]);
  const auto outputs = c.evaluate(values);
  for (std::size_t idx = 0; idx < final_ipw.size(); ++idx) {
    if (final_ipw[idx] == cd{}) continue;
    const std::size_t w = idx % L.work_dim();
    const auto claims = c.claims_for(w);
    if (claims.size() < k) {
      ++result.short_claim_labels;
      continue;
    }
    if (claims_hold(claims, outputs, k)) result.value += std::norm(final_ipw[idx]);
  }
  return result;
}

}  // namespace qts::qsim
