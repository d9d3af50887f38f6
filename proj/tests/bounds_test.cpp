#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qts/bounds/bounds.hpp"

using namespace qts::bounds;

TEST_CASE("binary entropy") {
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK_THROWS_AS(binary_entropy(-0.1), std::invalid_argument);
  // symmetry
  for (double a : {0.1, 0.17, 0.3, 0.42}) {
    CHECK(std::abs(binary_entropy(a) - binary_entropy(1.0 - a)) < 1e-12);
  }
}

TEST_CASE("entropy margins behind the simplified tails") {
  CHECK(1.0 - 0.1717 - binary_entropy(0.1717) > 1.0 / 6.0);
  CHECK(1.0 - 4.0 * 0.0429 - binary_entropy(4.0 * 0.0429) > 1.0 / 6.0);
}

TEST_CASE("matvec success bound") {
  // alpha = 0.1717 keeps the bound under ceil(h/(ck)) d^{-ck/6}
  for (std::size_t d : {2, 3, 4}) {
    for (std::size_t k : {1, 2, 4}) {
      MatvecBoundParams p;
      p.k = k;
      p.h = 6;
      p.c = 1.0;
      p.alpha = 0.1717;
      p.d = d;
      const double simple = std::ceil(6.0 / static_cast<double>(k)) *
                            std::pow(static_cast<double>(d), -static_cast<double>(k) / 6.0);
      CHECK(matvec_success_bound(p).value <= simple * (1.0 + 1e-12));
    }
  }

  // ck = h collapses the leading ceiling to 1
  MatvecBoundParams collapse;
  collapse.k = 6;
  collapse.h = 6;
  collapse.alpha = 0.25;
  const double ratio = std::exp2(binary_entropy(0.25)) / std::pow(2.0, 0.75);
  CHECK(matvec_success_bound(collapse).value == doctest::Approx(std::pow(ratio, 6.0)));

  // direct arithmetic cross-check: h=6, c=1, k=2, d=2, alpha=0.1717
  MatvecBoundParams p;
  p.k = 2;
  p.h = 6;
  p.alpha = 0.1717;
  const double expect =
      3.0 * std::pow(std::pow(2.0, binary_entropy(0.1717)) / std::pow(2.0, 1.0 - 0.1717), 2.0);
  CHECK(matvec_success_bound(p).value == doctest::Approx(expect).epsilon(1e-12));

  // the space factor multiplies by 2^{2S}
  MatvecBoundParams with_space = p;
  with_space.space = 3;
  CHECK(with_space.space.has_value());
  CHECK(matvec_success_bound(with_space).value ==
        doctest::Approx(expect * 64.0).epsilon(1e-12));
  CHECK(matvec_success_bound(with_space).vacuous);
}

TEST_CASE("matmul success bound") {
  // k = 0 is vacuous: the expression is 16
  MatmulBoundParams zero;
  zero.k = 0;
  zero.n = 8;
  const auto bz = matmul_success_bound(zero);
  CHECK(bz.value == doctest::Approx(16.0));
  CHECK(bz.vacuous);

  // simplified tail bounds the full expression at beta = 0.0429
  MatmulBoundParams p;
  p.k = 24;
  p.n = 24;
  p.d = 2;
  p.beta = 0.0429;
  MatmulBoundParams simple = p;
  simple.simplified = true;
  const double full = matmul_success_bound(p).value;
  const double simplified = matmul_success_bound(simple).value;
  CHECK(full <= simplified * (1.0 + 1e-12));
  CHECK(simplified == doctest::Approx(16.0 * std::pow(24.0, std::sqrt(12.0)) * std::pow(2.0, -1.0)));
}

TEST_CASE("sdpt bound scalings") {
  const auto q1 = sdpt_bound(10, 100, SdptModel::quantum, 0.01, 0.1);
  const auto q2 = sdpt_bound(20, 100, SdptModel::quantum, 0.01, 0.1);
  CHECK(q2.success_bound == doctest::Approx(q1.success_bound * q1.success_bound));

  const auto c1 = sdpt_bound(10, 100, SdptModel::classical, 0.01, 0.1);
  CHECK(q1.query_budget / c1.query_budget == doctest::Approx(1.0 / 10.0));  // 1/sqrt(100)

  CHECK(sdpt_bound(10, 100, SdptModel::quantum, 0.01, 0.1).success_bound ==
        doctest::Approx(std::exp2(-1.0)));
}

TEST_CASE("tradeoff curves") {
  // doubling n at the cubic rows multiplies by 8
  const double m1 = tradeoff_curve(Problem::matmul, 32, 16, 2);
  const double m2 = tradeoff_curve(Problem::matmul, 64, 16, 2);
  CHECK(m2 / m1 == doctest::Approx(8.0));

  // doubling S at the 1/S rows halves the value
  const double v1 = tradeoff_curve(Problem::matvec, 64, 16, 2);
  const double v2 = tradeoff_curve(Problem::matvec, 64, 32, 2);
  CHECK(v1 / v2 == doctest::Approx(2.0));

  CHECK_THROWS_AS(tradeoff_curve(Problem::matvec, 64, 2, 2), std::invalid_argument);
  CHECK(problem_from_tag("boolmm-quantum") == Problem::boolean_mm_quantum);
  CHECK_THROWS_AS(problem_from_tag("unknown"), std::invalid_argument);
  CHECK(problem_tags().size() == 14);

  // every tag is nonincreasing in S and nondecreasing in n on a spot grid
  for (const auto& tag : problem_tags()) {
    const Problem p = problem_from_tag(tag);
    double prev = tradeoff_curve(p, 64, 8, 2);
    for (double s : {10.0, 14.0, 20.0, 28.0}) {
      const double cur = tradeoff_curve(p, 64, s, 2);
      CHECK(cur <= prev * (1.0 + 1e-12));
      prev = cur;
    }
    double prev_n = tradeoff_curve(p, 16, 8, 2);
    for (double n : {24.0, 32.0, 48.0, 64.0}) {
      const double cur = tradeoff_curve(p, n, 8, 2);
      CHECK(cur >= prev_n * (1.0 - 1e-12));
      prev_n = cur;
    }
  }
}

TEST_CASE("cumulative memory bound") {
  // delta = 0 collapses to min(m h1, m' h1) log K
  CmParams p;
  p.m = 10;
  p.m_prime = 4;
  p.h1 = 3;
  p.log2_k = 2;
  p.delta = 0.0;
  p.t = 100;
  CHECK(cm_bound(p) == doctest::Approx(4.0 * 3.0 * 2.0));

  CHECK_THROWS_AS(cm_bound(CmParams{1, 1, 1, 1, 1.0, 1}), std::invalid_argument);

  // matvec instantiation scales as n^2 log d
  const double a = cm_bound(cm_matvec_instantiation(8, 4));
  const double b = cm_bound(cm_matvec_instantiation(16, 4));
  const double c = cm_bound(cm_matvec_instantiation(32, 4));
  CHECK(b / a == doctest::Approx(4.0).epsilon(0.01));
  CHECK(c / b == doctest::Approx(4.0).epsilon(0.01));

  // matmul instantiation scales as n^6 log d / T
  const double m1 = cm_bound(cm_matmul_instantiation(8, 4, 1e6));
  const double m2 = cm_bound(cm_matmul_instantiation(16, 4, 1e6));
  CHECK(m2 / m1 == doctest::Approx(64.0).epsilon(0.01));
  const double t1 = cm_bound(cm_matmul_instantiation(8, 4, 2e6));
  CHECK(m1 / t1 == doctest::Approx(2.0).epsilon(0.01));
}
