#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "qts/qsim/circuit.hpp"
#include "qts/qsim/grover.hpp"
#include "qts/qsim/random_circuit.hpp"
#include "qts/qsim/serialize.hpp"
#include "qts/support/errors.hpp"

using namespace qts;
using namespace qts::qsim;
using algebra::Alphabet;
using algebra::PrimeField;

namespace {

RegisterLayout small_layout(std::size_t n, std::size_t d, std::size_t w = 1) {
  const auto p = smallest_prime_geq(d);
  return RegisterLayout(Alphabet::first_d(PrimeField(p), d), n, w);
}

SparseState basis_state(const RegisterLayout& layout, std::uint32_t i, std::uint32_t p,
                        std::uint32_t w, std::vector<std::uint8_t> x) {
  SparseState s(layout);
  s.set(layout.pack(BasisLabel{i, p, w, std::move(x)}), 1.0);
  return s;
}

cd omega(std::size_t d, std::size_t t) {
  const double ang = 2.0 * std::numbers::pi * static_cast<double>(t % d) / static_cast<double>(d);
  return {std::cos(ang), std::sin(ang)};
}

// Independent implementation of the single-register recording-query action
// for p != 0; indices 0..d-1 are alphabet codes, index d is bot.
std::vector<cd> single_query_closed_form(std::size_t d, std::size_t p, std::uint8_t x) {
  std::vector<cd> out(d + 1, cd{});
  const double sd = std::sqrt(static_cast<double>(d));
  if (x == d) {
    for (std::size_t y = 0; y < d; ++y) out[y] = omega(d, p * y) / sd;
    return out;
  }
  out[x] += (1.0 - 2.0 / static_cast<double>(d)) * omega(d, p * x) + 1.0 / static_cast<double>(d);
  out[d] = omega(d, p * x) / sd;
  for (std::size_t y = 0; y < d; ++y) {
    if (y == x) continue;
    out[y] = (1.0 - omega(d, p * y) - omega(d, p * x)) / static_cast<double>(d);
  }
  return out;
}

SparseState random_sparse_state(const RegisterLayout& layout, Rng& rng, std::size_t support) {
  SparseState s(layout);
  for (std::size_t t = 0; t < support; ++t) {
    const std::uint64_t key = rng() % layout.total_dimension();
    s.add(key, cd(standard_normal(rng), standard_normal(rng)));
  }
  const double nrm = s.norm();
  SparseState out(layout);
  for (const auto& [key, a] : s.table()) out.set(key, a / nrm);
  return out;
}

}  // namespace

TEST_CASE("initial states") {
  const auto layout = small_layout(2, 2);
  const SparseState rec = initial_state(layout, RunMode::recording);
  CHECK(rec.support_size() == 1);
  CHECK(rec.amp(layout.pack(BasisLabel{0, 0, 0, {layout.bot_code(), layout.bot_code()}})) ==
        cd{1.0});
  CHECK(rec.norm() == doctest::Approx(1.0).epsilon(1e-12));

  const auto layout1 = small_layout(1, 2);
  const SparseState pur = initial_state(layout1, RunMode::standard_purified);
  CHECK(pur.support_size() == 2);
  for (const auto& [key, a] : pur.table()) {
    CHECK(std::abs(a - cd{1.0 / std::sqrt(2.0)}) < 1e-12);
  }
  CHECK(pur.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("dimension cap is enforced") {
  SimLimits limits;
  limits.max_dimension = 100;
  CHECK_THROWS_AS(RegisterLayout(Alphabet::first_d(PrimeField(5), 4), 6, 4, limits), budget_error);
}

TEST_CASE("phase oracle") {
  const auto layout = small_layout(1, 2);
  // d = 2, queried register holds the second alphabet element: phase -1
  const SparseState s = basis_state(layout, 1, 1, 0, {1});
  const SparseState o = apply_phase_oracle(s);
  CHECK(std::abs(o.amp(layout.pack(BasisLabel{1, 1, 0, {1}})) - cd{-1.0}) < 1e-12);

  // p = 0 leaves the state unchanged
  const SparseState s0 = basis_state(layout, 1, 0, 0, {1});
  CHECK(SparseState::distance(apply_phase_oracle(s0), s0) < 1e-15);

  // applying twice at d = 2 is the identity
  CHECK(SparseState::distance(apply_phase_oracle(o), s) < 1e-12);

  // bot at the queried register is refused in the standard domain
  const SparseState sb = basis_state(layout, 1, 1, 0, {layout.bot_code()});
  CHECK_THROWS_AS(apply_phase_oracle(sb), std::invalid_argument);
  CHECK_NOTHROW(apply_phase_oracle(sb, OracleDomain::extended));
}

TEST_CASE("s operator maps bot to the uniform superposition") {
  const auto layout = small_layout(1, 3);
  const SparseState s = basis_state(layout, 0, 0, 0, {layout.bot_code()});
  const SparseState u = apply_s(s);
  CHECK(u.support_size() == 3);
  for (std::size_t y = 0; y < 3; ++y) {
    CHECK(std::abs(u.amp(layout.pack(BasisLabel{0, 0, 0, {static_cast<std::uint8_t>(y)}})) -
                   cd{1.0 / std::sqrt(3.0)}) < 1e-12);
  }
}

TEST_CASE("s operator fixes phase-uniform vectors") {
  const std::size_t d = 3;
  const auto layout = small_layout(1, d);
  SparseState s(layout);
  for (std::size_t y = 0; y < d; ++y) {
    s.set(layout.pack(BasisLabel{0, 1, 0, {static_cast<std::uint8_t>(y)}}),
          omega(d, 1 * y) / std::sqrt(static_cast<double>(d)));
  }
  CHECK(SparseState::distance(apply_s(s), s) < 1e-12);
}

TEST_CASE("s squared is the identity on random states") {
  Rng rng = make_rng(5);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + t % 3;
    const std::size_t d = 2 + t % 3;
    const auto layout = small_layout(n, d, 1 + t % 2);
    const SparseState s = random_sparse_state(layout, rng, 4);
    const SparseState ss = apply_s(apply_s(s));
    CHECK(SparseState::distance(ss, s) < 1e-11);
  }
}

TEST_CASE("operators preserve the norm") {
  Rng rng = make_rng(7);
  const auto layout = small_layout(2, 3, 2);
  for (int t = 0; t < 50; ++t) {
    const SparseState s = random_sparse_state(layout, rng, 6);
    CHECK(std::abs(apply_s(s).norm() - 1.0) < 1e-10);
    CHECK(std::abs(apply_recording_oracle(s).norm() - 1.0) < 1e-10);
    const CMatrix u = random_unitary(layout.ipw_dim(), rng);
    CHECK(std::abs(apply_ipw_unitary(s, u).norm() - 1.0) < 1e-10);
  }
}

TEST_CASE("recording oracle basics") {
  const auto layout = small_layout(2, 2);
  // p = 0: no register is changed
  const SparseState s0 = basis_state(layout, 1, 0, 0, {layout.bot_code(), layout.bot_code()});
  CHECK(SparseState::distance(apply_recording_oracle(s0), s0) < 1e-12);

  // bot at the queried register with p != 0 becomes the phase-uniform vector
  const SparseState sb = basis_state(layout, 1, 1, 0, {layout.bot_code(), layout.bot_code()});
  const SparseState r = apply_recording_oracle(sb);
  for (std::size_t y = 0; y < 2; ++y) {
    const auto key = layout.pack(BasisLabel{1, 1, 0, {static_cast<std::uint8_t>(y), layout.bot_code()}});
    CHECK(std::abs(r.amp(key) - omega(2, y) / std::sqrt(2.0)) < 1e-12);
  }
}

TEST_CASE("single-register recording action matches the closed form") {
  for (std::size_t d : {2, 3, 4}) {
    const auto layout = small_layout(1, d);
    for (std::size_t p = 1; p < d; ++p) {
      for (std::uint8_t x = 0; x <= d; ++x) {
        const SparseState s = basis_state(layout, 1, static_cast<std::uint32_t>(p), 0, {x});
        const SparseState r = apply_recording_oracle(s);
        const auto expect = single_query_closed_form(d, p, x);
        for (std::uint8_t y = 0; y <= d; ++y) {
          const auto key = layout.pack(BasisLabel{1, static_cast<std::uint32_t>(p), 0, {y}});
          CHECK(std::abs(r.amp(key) - expect[y]) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("recording equivalence on random circuits") {
  Rng rng = make_rng(41);
  RandomCircuitSpec spec;
  spec.n = 2;
  spec.d = 2;
  spec.queries = 2;
  spec.work_dim = 3;
  for (int t = 0; t < 5; ++t) {
    const QueryCircuit c = random_circuit(spec, rng);
    CHECK(recording_equivalence_residual(c) < 1e-9);
    CHECK(std::abs(run_circuit(c, RunMode::standard_purified).norm() - 1.0) < 1e-9);
    CHECK(std::abs(run_circuit(c, RunMode::recording).norm() - 1.0) < 1e-9);
  }
}

TEST_CASE("zero-query circuits have zero residual") {
  const auto layout = small_layout(2, 3, 2);
  QueryCircuit c(layout, {CMatrix::identity(layout.ipw_dim())});
  CHECK(recording_equivalence_residual(c) < 1e-12);
  // the recording run leaves the all-bot initial state alone
  const SparseState phi = run_circuit(c, RunMode::recording);
  CHECK(phi.support_size() == 1);
  CHECK(max_nonbot_support(phi) == 0);
}

TEST_CASE("circuits that never set the phase register act trivially") {
  // Unitaries block-diagonal in p, random only on the p = 0 block: queries
  // never see p != 0, so the recording state stays all-bot.
  Rng rng = make_rng(43);
  const auto layout = small_layout(2, 2, 2);
  const std::size_t m = layout.ipw_dim();
  std::vector<std::size_t> p0;  // indices with p = 0
  for (std::size_t i = 0; i <= layout.n_inputs(); ++i)
    for (std::size_t w = 0; w < layout.work_dim(); ++w) p0.push_back(layout.ipw_index(i, 0, w));
  const CMatrix sub = random_unitary(p0.size(), rng);
  CMatrix u = CMatrix::identity(m);
  for (std::size_t a = 0; a < p0.size(); ++a)
    for (std::size_t b = 0; b < p0.size(); ++b) u(p0[a], p0[b]) = sub(a, b);

  QueryCircuit c(layout, {u, u, u});
  CHECK(recording_equivalence_residual(c) < 1e-12);
  const SparseState phi = run_circuit(c, RunMode::recording);
  CHECK(max_nonbot_support(phi) == 0);
}

TEST_CASE("recording sparsity grows by at most one per query") {
  Rng rng = make_rng(47);
  RandomCircuitSpec spec;
  spec.n = 3;
  spec.d = 2;
  spec.queries = 3;
  spec.work_dim = 2;
  const QueryCircuit c = random_circuit(spec, rng);
  SparseState s = initial_state(c.layout(), RunMode::recording);
  CHECK(max_nonbot_support(s) == 0);
  s = apply_ipw_unitary(s, c.unitary(0));
  for (std::size_t t = 1; t <= c.query_count(); ++t) {
    s = apply_recording_oracle(s);
    s = apply_ipw_unitary(s, c.unitary(t));
    CHECK(max_nonbot_support(s) <= t);
  }
}

TEST_CASE("success probability of the zero-query guess circuit is d^-k") {
  const std::size_t n = 2, d = 2;
  const auto layout = small_layout(n, d);
  ProblemSpec problem;
  problem.kind = ProblemSpec::Kind::matvec;
  problem.matrix = algebra::FieldMatrix::identity(PrimeField(2), n);
  std::vector<std::vector<Claim>> claims{{Claim{0, 0}, Claim{1, 1}}};
  QueryCircuit c(layout, {CMatrix::identity(layout.ipw_dim())}, claims, problem);

  const SparseState psi = run_circuit(c, RunMode::standard_purified);
  const auto s2 = success_probability(psi, c, 2);
  CHECK(std::abs(s2.value - 0.25) < 1e-12);
  const auto s1 = success_probability(psi, c, 1);
  CHECK(std::abs(s1.value - 0.5) < 1e-12);
  const auto s0 = success_probability(psi, c, 0);
  CHECK(std::abs(s0.value - 1.0) < 1e-12);

  // the recording route, after S, reports the same number
  const SparseState via_rec = apply_s(run_circuit(c, RunMode::recording));
  CHECK(std::abs(success_probability(via_rec, c, 2).value - 0.25) < 1e-9);

  // k beyond the claim list flags the labels
  const auto s3 = success_probability(psi, c, 3);
  CHECK(s3.value == 0.0);
  CHECK(s3.short_claim_labels > 0);
}

TEST_CASE("a one-query circuit can compute a single bit exactly") {
  // OR of one bit is the bit itself; zero Grover iterations plus the readout
  // query pin it down deterministically.
  const QueryCircuit c = grover_or_circuit(1, 0);
  const SparseState psi = run_circuit(c, RunMode::standard_purified);
  CHECK(std::abs(success_probability(psi, c, 1).value - 1.0) < 1e-9);
  CHECK(recording_equivalence_residual(c) < 1e-9);
}

TEST_CASE("purified success equals the average of fixed-input successes") {
  Rng rng = make_rng(53);
  const std::size_t n = 2, d = 2;
  const auto layout = small_layout(n, d, 2);
  std::vector<CMatrix> us;
  for (int t = 0; t < 3; ++t) us.push_back(random_unitary(layout.ipw_dim(), rng));
  ProblemSpec problem;
  problem.kind = ProblemSpec::Kind::identity;
  std::vector<std::vector<Claim>> claims{{Claim{0, 0}}, {Claim{0, 1}}};
  QueryCircuit c(layout, us, claims, problem);

  const auto purified = success_probability(run_circuit(c, RunMode::standard_purified), c, 1);
  double avg = 0.0;
  for (std::uint8_t x0 = 0; x0 < 2; ++x0)
    for (std::uint8_t x1 = 0; x1 < 2; ++x1) {
      const std::vector<std::uint8_t> codes{x0, x1};
      const auto v = run_fixed(c, codes);
      avg += success_probability_fixed(c, v, codes, 1).value;
    }
  avg /= 4.0;
  CHECK(std::abs(purified.value - avg) < 1e-10);
}

TEST_CASE("grover success probabilities") {
  // one marked among four, one iteration: success exactly 1
  const QueryCircuit c1 = grover_or_circuit(4, 1);
  const std::vector<std::uint8_t> one_marked{0, 1, 0, 0};
  const auto stats1 = grover_stats(c1, one_marked);
  CHECK(std::abs(stats1.p_claim_correct - 1.0) < 1e-9);
  CHECK(std::abs(stats1.p_detect - 1.0) < 1e-9);

  // zero iterations: uniform measurement hits the one marked index 1/4 of the time
  const QueryCircuit c0 = grover_or_circuit(4, 0);
  const auto stats0 = grover_stats(c0, one_marked);
  CHECK(std::abs(stats0.p_claim_correct - 0.25) < 1e-12);

  // all-zero input: the claim is OR = 0 with certainty, at any iteration count
  const std::vector<std::uint8_t> zeros{0, 0, 0, 0};
  for (std::size_t r : {0, 1, 2}) {
    const auto stats = grover_stats(grover_or_circuit(4, r), zeros);
    CHECK(std::abs(stats.p_claim_correct - 1.0) < 1e-12);
    CHECK(stats.p_detect < 1e-12);
  }

  CHECK(best_grover_iterations(4, 1) == 1);
  CHECK(grover_iterations_exact(4, 1, 1));
  CHECK(best_grover_iterations(4, 0) == 0);
}

TEST_CASE("grover amplitude matches the sine formula") {
  // success after r iterations is sin^2((2r+1) theta) for the detect branch
  for (std::size_t n : {4, 8}) {
    for (std::size_t marked : {1, 2}) {
      std::vector<std::uint8_t> x(n, 0);
      for (std::size_t t = 0; t < marked; ++t) x[t] = 1;
      const double theta = std::asin(std::sqrt(static_cast<double>(marked) / n));
      for (std::size_t r : {0, 1, 2}) {
        const auto stats = grover_stats(grover_or_circuit(n, r), x);
        const double want = std::pow(std::sin((2.0 * r + 1.0) * theta), 2.0);
        CHECK(std::abs(stats.p_detect - want) < 1e-9);
      }
    }
  }
}

TEST_CASE("circuit json round trip") {
  Rng rng = make_rng(59);
  const auto layout = small_layout(2, 2, 2);
  std::vector<CMatrix> us;
  for (int t = 0; t < 2; ++t) us.push_back(random_unitary(layout.ipw_dim(), rng));
  ProblemSpec problem;
  problem.kind = ProblemSpec::Kind::matvec;
  problem.matrix = algebra::FieldMatrix::identity(PrimeField(2), 2);
  std::vector<std::vector<Claim>> claims{{Claim{0, 1}}, {Claim{1, 0}}};
  const QueryCircuit c(layout, us, claims, problem);

  const QueryCircuit back = circuit_from_json(circuit_to_json(c));
  CHECK(back.query_count() == c.query_count());
  CHECK(back.claim_table() == c.claim_table());
  const SparseState a = run_circuit(c, RunMode::standard_purified);
  const SparseState b = run_circuit(back, RunMode::standard_purified);
  CHECK(SparseState::distance(a, b) < 1e-12);
}
