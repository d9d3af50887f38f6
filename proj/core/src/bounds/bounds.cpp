#include "qts/bounds/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace qts::bounds {

double binary_entropy(double alpha) {
  if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("binary_entropy: alpha outside [0,1]");
  if (alpha == 0.0 || alpha == 1.0) return 0.0;
  return -alpha * std::log2(alpha) - (1.0 - alpha) * std::log2(1.0 - alpha);
}

BoundValue matvec_success_bound(const MatvecBoundParams& p) {
  if (!(p.alpha > 0.0) || p.alpha >= 1.0) {
    throw std::invalid_argument("matvec_success_bound: alpha must be in (0,1)");
  }
  if (!(p.c > 0.0) || p.c > 1.0) {
    throw std::invalid_argument("matvec_success_bound: c must be in (0,1]");
  }
  if (p.k == 0 || p.h == 0 || p.d < 2) {
    throw std::invalid_argument("matvec_success_bound: need k, h >= 1 and d >= 2");
  }
  const double ck = p.c * static_cast<double>(p.k);
  const double lead = std::ceil(static_cast<double>(p.h) / ck);
  const double ratio =
      std::exp2(binary_entropy(p.alpha)) / std::pow(static_cast<double>(p.d), 1.0 - p.alpha);
  double value = lead * std::pow(ratio, ck);
  if (p.space) value *= std::exp2(2.0 * static_cast<double>(*p.space));
  return BoundValue{value, value > 1.0};
}

BoundValue matmul_success_bound(const MatmulBoundParams& p) {
  if (!(p.beta > 0.0) || p.beta >= 0.25) {
    throw std::invalid_argument("matmul_success_bound: beta must be in (0, 1/4)");
  }
  if (p.n == 0 || p.d < 2) {
    throw std::invalid_argument("matmul_success_bound: need n >= 1 and d >= 2");
  }
  const double k = static_cast<double>(p.k);
  const double head =
      16.0 * std::pow(static_cast<double>(std::min(p.k, p.n)), std::sqrt(k / 2.0));
  double tail;
  if (p.simplified) {
    if (p.beta > 0.0429) {
      throw std::invalid_argument("matmul_success_bound: simplified form needs beta <= 0.0429");
    }
    tail = std::pow(static_cast<double>(p.d), -k / 24.0);
  } else {
    const double ratio = std::exp2(binary_entropy(4.0 * p.beta)) /
                         std::pow(static_cast<double>(p.d), 1.0 - 4.0 * p.beta);
    tail = std::pow(ratio, k / 4.0);
  }
  double value = head * tail;
  if (p.space) value *= std::exp2(2.0 * static_cast<double>(*p.space));
  return BoundValue{value, value > 1.0};
}

SdptBound sdpt_bound(std::size_t k, std::size_t n, SdptModel model, double eps, double gamma) {
  const double kk = static_cast<double>(k);
  const double nn = static_cast<double>(n);
  SdptBound out;
  out.query_budget = model == SdptModel::classical ? eps * kk * nn : eps * kk * std::sqrt(nn);
  out.success_bound = std::exp2(-gamma * kk);
  return out;
}

namespace {

double coloring_upper(double k) { return std::sqrt(1.5) * std::pow(k, 2.0 / 3.0); }

}  // namespace

double tradeoff_curve(Problem problem, double n, double s, double d) {
  if (n < 2.0 || d < 2.0) throw std::invalid_argument("tradeoff_curve: need n >= 2 and d >= 2");
  if (s < std::log2(n)) throw std::invalid_argument("tradeoff_curve: need S >= log2 n");
  const double logd = std::log2(d);
  switch (problem) {
    case Problem::matvec:
    case Problem::dft:
    case Problem::convolution:
      return n * n * logd / s;
    case Problem::binary_mult: {
      const double logn = std::log2(n);
      return n * n / (s * logn * logn);
    }
    case Problem::triple_product:
    case Problem::cube:
    case Problem::inverse:
      return n * n * n * n * logd / s;
    case Problem::linear_system:
      return n * n * n * logd / s;
    case Problem::matmul:
    case Problem::matrix_square:
      return n * n * n * std::sqrt(logd / s);
    case Problem::boolean_mm_quantum:
    case Problem::boolean_square:
      return std::pow(n, 2.5) / std::cbrt(s);
    case Problem::boolean_mm_classical:
      return n * n * n / std::pow(s, 2.0 / 3.0);
    case Problem::boolean_mm_general:
      return std::pow(n, 2.5) / std::sqrt(coloring_upper(s));
  }
  throw std::invalid_argument("tradeoff_curve: unknown problem");
}

namespace {

const std::vector<std::pair<std::string, Problem>>& tag_table() {
  static const std::vector<std::pair<std::string, Problem>> table = {
      {"matvec", Problem::matvec},
      {"dft", Problem::dft},
      {"convolution", Problem::convolution},
      {"binary-mult", Problem::binary_mult},
      {"triple-product", Problem::triple_product},
      {"cube", Problem::cube},
      {"inverse", Problem::inverse},
      {"linear-system", Problem::linear_system},
      {"matmul", Problem::matmul},
      {"matrix-square", Problem::matrix_square},
      {"boolmm-quantum", Problem::boolean_mm_quantum},
      {"boolmm-classical", Problem::boolean_mm_classical},
      {"boolmm-general", Problem::boolean_mm_general},
      {"boolmm-square", Problem::boolean_square},
  };
  return table;
}

}  // namespace

Problem problem_from_tag(const std::string& tag) {
  for (const auto& [name, p] : tag_table()) {
    if (name == tag) return p;
  }
  throw std::invalid_argument("unknown problem tag: " + tag);
}

const std::vector<std::string>& problem_tags() {
  static const std::vector<std::string> tags = [] {
    std::vector<std::string> out;
    for (const auto& [name, p] : tag_table()) out.push_back(name);
    return out;
  }();
  return tags;
}

double cm_bound(const CmParams& p) {
  if (p.delta < 0.0 || p.delta >= 1.0) throw std::invalid_argument("cm_bound: delta outside [0,1)");
  if (p.t <= 0.0) throw std::invalid_argument("cm_bound: T must be positive");
  const double inv = 1.0 / (1.0 - p.delta);
  const double first =
      std::pow(p.m * p.h1, inv) * p.log2_k / std::pow(p.t, p.delta * inv);
  const double second = std::pow(p.m_prime, 1.0 + p.delta) * p.h1 * p.log2_k;
  return std::min(first, second);
}

CmParams cm_matvec_instantiation(double n, double d, double alpha, double gamma) {
  CmParams p;
  p.m = n;
  p.m_prime = gamma * n;
  p.h1 = alpha * n;
  p.log2_k = std::log2(d) / 6.0;
  p.delta = 0.0;
  p.t = 1.0;  // unused at delta = 0
  return p;
}

CmParams cm_matmul_instantiation(double n, double d, double t) {
  CmParams p;
  p.m = n * n;
  p.m_prime = n * n;
  p.h1 = n;
  p.log2_k = std::log2(d) / 48.0;
  p.delta = 0.5;
  p.t = t;
  return p;
}

}  // namespace qts::bounds
