#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "qts/algebra/prime_field.hpp"

namespace qts::algebra {

// Dense matrix over Z_p, row-major. Entries are always reduced to [0, p).
class FieldMatrix {
 public:
  FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols);  // zeros
  static FieldMatrix identity(const PrimeField& field, std::size_t n);
  static FieldMatrix from_rows(const PrimeField& field,
                               std::initializer_list<std::initializer_list<std::uint64_t>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

  std::uint64_t operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::uint64_t v) { e_[r * cols_ + c] = field_.reduce(v); }

  FieldMatrix transpose() const;
  bool is_zero() const;
  bool operator==(const FieldMatrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }

 private:
  PrimeField field_;
  std::size_t rows_, cols_;
  std::vector<std::uint64_t> e_;
};

FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b);
std::vector<std::uint64_t> mat_vec(const FieldMatrix& a, std::span<const std::uint64_t> x);
std::size_t mat_rank(const FieldMatrix& a);
FieldMatrix mat_inverse(const FieldMatrix& a);  // singular_error when not invertible
FieldMatrix kron(const FieldMatrix& a, const FieldMatrix& b);

FieldMatrix submatrix(const FieldMatrix& a, std::span<const std::size_t> rows,
                      std::span<const std::size_t> cols);
std::size_t submatrix_rank(const FieldMatrix& a, std::span<const std::size_t> rows,
                           std::span<const std::size_t> cols);

// The n x n matrix U with U[i][j] = u[(i - j - 1) mod n] (0-based u), i.e.
// first row (u_n, u_{n-1}, ..., u_1) and each later row its cyclic right
// continuation. U v is taken as *the* definition of the convolution u * v;
// it equals the textbook cyclic convolution shifted down by one position.
// Requires |u| even (the rigidity argument splits U into n/2-sized blocks).
FieldMatrix make_conv_matrix(const PrimeField& field, std::span<const std::uint64_t> u);
std::vector<std::uint64_t> convolve(const PrimeField& field, std::span<const std::uint64_t> u,
                                    std::span<const std::uint64_t> v);

// W[i][j] = w^{ij} for the smallest primitive n-th root of unity w in Z_p.
// Requires n | p - 1.
FieldMatrix make_dft_matrix(std::size_t n, const PrimeField& field);
std::uint64_t primitive_root_of_unity(std::size_t n, const PrimeField& field);

}  // namespace qts::algebra
