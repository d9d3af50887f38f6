#include "qts/algebra/field_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qts/support/errors.hpp"

namespace qts::algebra {

namespace {

void require_same_field(const FieldMatrix& a, const FieldMatrix& b, const char* op) {
  if (!(a.field() == b.field())) {
    throw std::invalid_argument(std::string(op) + ": field mismatch");
  }
}

}  // namespace

FieldMatrix::FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

FieldMatrix FieldMatrix::identity(const PrimeField& field, std::size_t n) {
  FieldMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FieldMatrix FieldMatrix::from_rows(
    const PrimeField& field, std::initializer_list<std::initializer_list<std::uint64_t>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  FieldMatrix m(field, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("from_rows: ragged rows");
    std::size_t j = 0;
    for (std::uint64_t v : row) m.set(i, j++, v);
    ++i;
  }
  return m;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, (*this)(r, c));
  return t;
}

bool FieldMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](std::uint64_t v) { return v == 0; });
}

FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_field(a, b, "mat_mul");
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
  const PrimeField& f = a.field();
  FieldMatrix c(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c.set(i, j, f.add(c(i, j), f.mul(aik, b(k, j))));
      }
    }
  }
  return c;
}

std::vector<std::uint64_t> mat_vec(const FieldMatrix& a, std::span<const std::uint64_t> x) {
  if (a.cols() != x.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
  const PrimeField& f = a.field();
  std::vector<std::uint64_t> y(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) acc = f.add(acc, f.mul(a(i, j), f.reduce(x[j])));
    y[i] = acc;
  }
  return y;
}

namespace {

// Row echelon elimination on a scratch copy; returns the rank.
std::size_t eliminate(const PrimeField& f, std::vector<std::uint64_t>& m, std::size_t rows,
                      std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m[pivot * cols + j], m[rank * cols + j]);
    }
    const std::uint64_t inv = f.inv(m[rank * cols + col]);
    for (std::size_t j = col; j < cols; ++j) m[rank * cols + j] = f.mul(m[rank * cols + j], inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const std::uint64_t v = m[r * cols + col];
      if (v == 0) continue;
      for (std::size_t j = col; j < cols; ++j) {
        m[r * cols + j] = f.sub(m[r * cols + j], f.mul(v, m[rank * cols + j]));
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t mat_rank(const FieldMatrix& a) {
  std::vector<std::uint64_t> scratch(a.rows() * a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) scratch[r * a.cols() + c] = a(r, c);
  return eliminate(a.field(), scratch, a.rows(), a.cols());
}

FieldMatrix mat_inverse(const FieldMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("mat_inverse: matrix not square");
  const std::size_t n = a.rows();
  const PrimeField& f = a.field();
  // Gauss-Jordan on [A | I].
  const std::size_t w = 2 * n;
  std::vector<std::uint64_t> m(n * w, 0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m[r * w + c] = a(r, c);
    m[r * w + n + r] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot * w + col] == 0) ++pivot;
    if (pivot == n) throw singular_error("mat_inverse: matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < w; ++j) std::swap(m[pivot * w + j], m[col * w + j]);
    }
    const std::uint64_t inv = f.inv(m[col * w + col]);
    for (std::size_t j = 0; j < w; ++j) m[col * w + j] = f.mul(m[col * w + j], inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const std::uint64_t v = m[r * w + col];
      if (v == 0) continue;
      for (std::size_t j = 0; j < w; ++j) m[r * w + j] = f.sub(m[r * w + j], f.mul(v, m[col * w + j]));
    }
  }
  FieldMatrix out(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.set(r, c, m[r * w + n + c]);
  return out;
}

FieldMatrix kron(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_field(a, b, "kron");
  const PrimeField& f = a.field();
  FieldMatrix k(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const std::uint64_t aij = a(i, j);
      if (aij == 0) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) {
          k.set(i * b.rows() + r, j * b.cols() + c, f.mul(aij, b(r, c)));
        }
    }
  return k;
}

FieldMatrix submatrix(const FieldMatrix& a, std::span<const std::size_t> rows,
                      std::span<const std::size_t> cols) {
  FieldMatrix s(a.field(), rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= a.rows()) throw std::invalid_argument("submatrix: row out of range");
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j] >= a.cols()) throw std::invalid_argument("submatrix: column out of range");
      s.set(i, j, a(rows[i], cols[j]));
    }
  }
  return s;
}

std::size_t submatrix_rank(const FieldMatrix& a, std::span<const std::size_t> rows,
                           std::span<const std::size_t> cols) {
  std::vector<std::uint64_t> scratch(rows.size() * cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) scratch[i * cols.size() + j] = a(rows[i], cols[j]);
  return eliminate(a.field(), scratch, rows.size(), cols.size());
}

FieldMatrix make_conv_matrix(const PrimeField& field, std::span<const std::uint64_t> u) {
  const std::size_t n = u.size();
  if (n == 0 || n % 2 != 0) {
    throw std::invalid_argument("make_conv_matrix: length must be even and positive");
  }
  FieldMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m.set(i, j, field.reduce(u[(i + n - j - 1) % n]));
    }
  return m;
}

std::vector<std::uint64_t> convolve(const PrimeField& field, std::span<const std::uint64_t> u,
                                    std::span<const std::uint64_t> v) {
  if (u.size() != v.size()) throw std::invalid_argument("convolve: length mismatch");
  const std::size_t n = u.size();
  if (n == 0 || n % 2 != 0) {
    throw std::invalid_argument("convolve: length must be even and positive");
  }
  std::vector<std::uint64_t> w(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      acc = field.add(acc, field.mul(field.reduce(u[(i + n - j - 1) % n]), field.reduce(v[j])));
    }
    w[i] = acc;
  }
  return w;
}

namespace {

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> qs;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      qs.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) qs.push_back(n);
  return qs;
}

}  // namespace

std::uint64_t primitive_root_of_unity(std::size_t n, const PrimeField& field) {
  if (n == 0) throw std::invalid_argument("primitive_root_of_unity: n must be positive");
  const std::uint64_t p = field.modulus();
  if ((p - 1) % n != 0) {
    throw std::invalid_argument("primitive_root_of_unity: no primitive " + std::to_string(n) +
                                "-th root of unity mod " + std::to_string(p));
  }
  if (n == 1) return 1;
  const auto qs = prime_divisors(n);
  for (std::uint64_t w = 2; w < p; ++w) {
    if (field.pow(w, n) != 1) continue;
    bool order_n = true;
    for (std::uint64_t q : qs) {
      if (field.pow(w, n / q) == 1) {
        order_n = false;
        break;
      }
    }
    if (order_n) return w;
  }
  throw std::invalid_argument("primitive_root_of_unity: none found");
}

FieldMatrix make_dft_matrix(std::size_t n, const PrimeField& field) {
  const std::uint64_t w = primitive_root_of_unity(n, field);
  FieldMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m.set(i, j, field.pow(w, (static_cast<std::uint64_t>(i) * j) % n));
    }
  return m;
}

}  // namespace qts::algebra
