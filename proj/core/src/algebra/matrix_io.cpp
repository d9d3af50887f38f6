#include "qts/algebra/matrix_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qts::algebra {

void write_matrix(std::ostream& os, const FieldMatrix& m) {
  os << m.rows() << ' ' << m.cols() << ' ' << m.field().modulus() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      os << m(r, c) << (c + 1 == m.cols() ? '\n' : ' ');
    }
  }
}

void write_matrix(std::ostream& os, const BoolMatrix& m) {
  os << m.rows() << ' ' << m.cols() << " 2\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      os << (m(r, c) ? 1 : 0) << (c + 1 == m.cols() ? '\n' : ' ');
    }
  }
}

FieldMatrix read_field_matrix(std::istream& is) {
  std::size_t rows = 0, cols = 0;
  std::uint64_t modulus = 0;
  if (!(is >> rows >> cols >> modulus)) {
    throw std::invalid_argument("matrix read: bad header (want \"rows cols modulus\")");
  }
  FieldMatrix m(PrimeField(modulus), rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      std::uint64_t v = 0;
      if (!(is >> v)) throw std::invalid_argument("matrix read: missing entries");
      m.set(r, c, v);
    }
  return m;
}

BoolMatrix read_bool_matrix(std::istream& is) {
  std::size_t rows = 0, cols = 0;
  std::uint64_t modulus = 0;
  if (!(is >> rows >> cols >> modulus)) {
    throw std::invalid_argument("matrix read: bad header (want \"rows cols modulus\")");
  }
  if (modulus != 2) {
    throw std::invalid_argument("matrix read: Boolean matrices use modulus 2");
  }
  BoolMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      std::uint64_t v = 0;
      if (!(is >> v)) throw std::invalid_argument("matrix read: missing entries");
      if (v > 1) throw std::invalid_argument("matrix read: Boolean entry not in {0,1}");
      m.set(r, c, v != 0);
    }
  return m;
}

namespace {

std::ifstream open_for_read(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open " + path);
  return f;
}

}  // namespace

FieldMatrix load_field_matrix(const std::string& path) {
  auto f = open_for_read(path);
  return read_field_matrix(f);
}

BoolMatrix load_bool_matrix(const std::string& path) {
  auto f = open_for_read(path);
  return read_bool_matrix(f);
}

void save_matrix(const std::string& path, const FieldMatrix& m) {
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot write " + path);
  write_matrix(f, m);
}

void save_matrix(const std::string& path, const BoolMatrix& m) {
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot write " + path);
  write_matrix(f, m);
}

}  // namespace qts::algebra
