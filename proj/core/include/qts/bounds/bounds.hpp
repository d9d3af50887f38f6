#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qts::bounds {

// H2(a) = -a log2 a - (1-a) log2 (1-a), with H2(0) = H2(1) = 0.
double binary_entropy(double alpha);

struct BoundValue {
  double value = 0.0;
  bool vacuous = false;  // the expression exceeds 1 and asserts nothing
};

// Success bound for producing k correct outputs of a matrix-vector product
// over a (k, h, c)-rigid matrix with at most alpha*h queries:
//   ceil(h/(c k)) * (2^{H2(alpha)} / d^{1-alpha})^{c k},
// times 2^{2S} when a space bound is supplied.
struct MatvecBoundParams {
  std::size_t k = 1;
  std::size_t h = 1;
  double c = 1.0;
  double alpha = 0.1717;
  std::size_t d = 2;
  std::optional<std::size_t> space = std::nullopt;
};

BoundValue matvec_success_bound(const MatvecBoundParams& p);

// Success bound for k correct outputs of an n x n matrix product:
//   16 min(k,n)^{sqrt(k/2)} (2^{H2(4 beta)} / d^{1-4 beta})^{k/4},
// with the simplified tail d^{-k/24} available for beta <= 0.0429.
struct MatmulBoundParams {
  std::size_t k = 1;
  std::size_t n = 1;
  std::size_t d = 2;
  double beta = 0.0429;
  std::optional<std::size_t> space = std::nullopt;
  bool simplified = false;
};

BoundValue matmul_success_bound(const MatmulBoundParams& p);

// Strong direct product: a per-instance query budget with 2^{-gamma k}
// success. The constants are user parameters, never asserted.
enum class SdptModel { classical, quantum };

struct SdptBound {
  double query_budget = 0.0;
  double success_bound = 0.0;
};

SdptBound sdpt_bound(std::size_t k, std::size_t n, SdptModel model, double eps = 0.01,
                     double gamma = 0.1);

// Constant-free time-space tradeoff curves (leading constant 1).
enum class Problem {
  matvec,
  dft,
  convolution,
  binary_mult,
  triple_product,
  cube,
  inverse,
  linear_system,
  matmul,
  matrix_square,
  boolean_mm_quantum,
  boolean_mm_classical,
  boolean_mm_general,
  boolean_square,
};

double tradeoff_curve(Problem problem, double n, double s, double d);
Problem problem_from_tag(const std::string& tag);
const std::vector<std::string>& problem_tags();

// Cumulative-memory lower bound body:
//   min( (m h1)^{1/(1-Delta)} log2 K / T^{Delta/(1-Delta)},
//        m'^{1+Delta} h1 log2 K ).
struct CmParams {
  double m = 0.0;
  double m_prime = 0.0;
  double h1 = 0.0;
  double log2_k = 0.0;
  double delta = 0.0;  // in [0, 1)
  double t = 1.0;
};

double cm_bound(const CmParams& p);

// Standard instantiations: matrix-vector (Delta = 0, h1 = alpha n,
// K = d^{1/6}, m' = gamma n) and matrix product (Delta = 1/2, h1 = n,
// K = d^{1/48}, m = m' = n^2).
CmParams cm_matvec_instantiation(double n, double d, double alpha = 0.1717, double gamma = 0.25);
CmParams cm_matmul_instantiation(double n, double d, double t);

}  // namespace qts::bounds
