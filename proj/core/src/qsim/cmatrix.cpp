#include "qts/qsim/cmatrix.hpp"

#include <cmath>
#include <stdexcept>

namespace qts::qsim {

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix multiply(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("CMatrix multiply: dimension mismatch");
  CMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cd aik = a(i, k);
      if (aik == cd{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

std::vector<cd> apply_matrix(const CMatrix& u, std::span<const cd> v) {
  if (u.cols() != v.size()) throw std::invalid_argument("CMatrix apply: dimension mismatch");
  std::vector<cd> out(u.rows());
  for (std::size_t j = 0; j < u.cols(); ++j) {
    const cd vj = v[j];
    if (vj == cd{}) continue;
    for (std::size_t i = 0; i < u.rows(); ++i) out[i] += u(i, j) * vj;
  }
  return out;
}

CMatrix dagger(const CMatrix& a) {
  CMatrix d(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) d(j, i) = std::conj(a(i, j));
  return d;
}

double unitarity_defect(const CMatrix& u) {
  if (u.rows() != u.cols()) return 1.0;
  const CMatrix p = multiply(dagger(u), u);
  double worst = 0.0;
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) {
      const cd want = i == j ? cd{1.0} : cd{};
      worst = std::max(worst, std::abs(p(i, j) - want));
    }
  return worst;
}

bool is_unitary(const CMatrix& u, double tol) { return unitarity_defect(u) <= tol; }

CMatrix random_unitary(std::size_t n, Rng& rng) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = cd(standard_normal(rng), standard_normal(rng));
  // Two passes of modified Gram-Schmidt over columns.
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t prev = 0; prev < c; ++prev) {
        cd dot{};
        for (std::size_t r = 0; r < n; ++r) dot += std::conj(m(r, prev)) * m(r, c);
        for (std::size_t r = 0; r < n; ++r) m(r, c) -= dot * m(r, prev);
      }
      double norm = 0.0;
      for (std::size_t r = 0; r < n; ++r) norm += std::norm(m(r, c));
      norm = std::sqrt(norm);
      for (std::size_t r = 0; r < n; ++r) m(r, c) /= norm;
    }
  }
  return m;
}

CMatrix reflection_to(std::span<const double> target) {
  const std::size_t n = target.size();
  std::vector<double> v(target.begin(), target.end());
  v[0] -= 1.0;  // v = t - e_0
  double vv = 0.0;
  for (double x : v) vv += x * x;
  if (vv < 1e-24) return CMatrix::identity(n);
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double h = (i == j ? 1.0 : 0.0) - 2.0 * v[i] * v[j] / vv;
      m(i, j) = h;
    }
  return m;
}

}  // namespace qts::qsim
