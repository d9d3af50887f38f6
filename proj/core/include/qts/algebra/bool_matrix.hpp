#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace qts::algebra {

// Dense 0/1 matrix with the (OR, AND) product.
class BoolMatrix {
 public:
  BoolMatrix(std::size_t rows, std::size_t cols);
  static BoolMatrix identity(std::size_t n);
  static BoolMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c] != 0; }
  void set(std::size_t r, std::size_t c, bool v) { e_[r * cols_ + c] = v ? 1 : 0; }
  std::size_t row_weight(std::size_t r) const;
  bool operator==(const BoolMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<std::uint8_t> e_;
};

// C[i][j] = OR_k (A[i][k] AND B[k][j]).
BoolMatrix bool_mat_mul(const BoolMatrix& a, const BoolMatrix& b);
std::vector<std::uint8_t> bool_mat_vec(const BoolMatrix& a, std::span<const std::uint8_t> x);

}  // namespace qts::algebra
