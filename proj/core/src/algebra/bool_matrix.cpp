#include "qts/algebra/bool_matrix.hpp"

#include <numeric>
#include <stdexcept>

namespace qts::algebra {

BoolMatrix::BoolMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols, 0) {}

BoolMatrix BoolMatrix::identity(std::size_t n) {
  BoolMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BoolMatrix BoolMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  BoolMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("from_rows: ragged rows");
    std::size_t j = 0;
    for (int v : row) m.set(i, j++, v != 0);
    ++i;
  }
  return m;
}

std::size_t BoolMatrix::row_weight(std::size_t r) const {
  std::size_t w = 0;
  for (std::size_t c = 0; c < cols_; ++c) w += e_[r * cols_ + c];
  return w;
}

BoolMatrix bool_mat_mul(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("bool_mat_mul: dimension mismatch");
  BoolMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      bool v = false;
      for (std::size_t k = 0; k < a.cols() && !v; ++k) v = a(i, k) && b(k, j);
      c.set(i, j, v);
    }
  return c;
}

std::vector<std::uint8_t> bool_mat_vec(const BoolMatrix& a, std::span<const std::uint8_t> x) {
  if (a.cols() != x.size()) throw std::invalid_argument("bool_mat_vec: dimension mismatch");
  std::vector<std::uint8_t> y(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) && x[j]) {
        y[i] = 1;
        break;
      }
    }
  }
  return y;
}

}  // namespace qts::algebra
