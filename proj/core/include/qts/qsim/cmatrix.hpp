#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qts/support/rng.hpp"

namespace qts::qsim {

using cd = std::complex<double>;

// Small dense complex matrix; used for the work unitaries on the (i, p, w)
// registers. No attempt at being a linear algebra library.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  static CMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  cd& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  cd operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<cd> e_;
};

CMatrix multiply(const CMatrix& a, const CMatrix& b);
std::vector<cd> apply_matrix(const CMatrix& u, std::span<const cd> v);
CMatrix dagger(const CMatrix& a);
double unitarity_defect(const CMatrix& u);  // max |(U^dag U - I)_{rc}|
bool is_unitary(const CMatrix& u, double tol = 1e-10);

// Haar-ish random unitary: Ginibre matrix orthonormalized by two passes of
// modified Gram-Schmidt.
CMatrix random_unitary(std::size_t n, Rng& rng);

// Real reflection mapping e_0 to the given unit vector (identity when the
// target already is e_0).
CMatrix reflection_to(std::span<const double> target);

}  // namespace qts::qsim
