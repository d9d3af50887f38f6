#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qts/algebra/field_matrix.hpp"
#include "qts/rigidity/rigidity.hpp"

namespace qts::reductions {

// A constructed object together with the block of a derived object that must
// equal a directly-computed target, and the result of that exact comparison.
struct EmbeddingResult {
  algebra::FieldMatrix constructed;  // the block matrix M (or Kronecker operator)
  algebra::FieldMatrix derived;      // M^3 / M^{-1} / M^2 / operator * vec
  struct Block {
    std::size_t row0 = 0, col0 = 0, rows = 0, cols = 0;
  } extraction;
  algebra::FieldMatrix extracted;    // derived restricted to the block
  algebra::FieldMatrix target;       // computed directly from the inputs
  bool verified = false;             // extracted == target, exact
};

// vec_rows(ABC) = (A kron C^T) vec_rows(B), where vec_rows stacks the
// transposed rows into one column.
EmbeddingResult triple_product_via_kron(const algebra::FieldMatrix& a,
                                        const algebra::FieldMatrix& b,
                                        const algebra::FieldMatrix& c);

// 4n x 4n nilpotent block matrix with A, B, C above the diagonal; the top
// right n x n block of M^3 is ABC.
EmbeddingResult embed_cube(const algebra::FieldMatrix& a, const algebra::FieldMatrix& b,
                           const algebra::FieldMatrix& c);

// 4n x 4n unit upper triangular M with -A, -B, -C above the diagonal; the
// top right n x n block of M^{-1} is ABC.
EmbeddingResult embed_inverse(const algebra::FieldMatrix& a, const algebra::FieldMatrix& b,
                              const algebra::FieldMatrix& c);

// 3n x 3n upper triangular M with A, B above the diagonal; the top right
// n x n block of M^2 is AB.
EmbeddingResult embed_square(const algebra::FieldMatrix& a, const algebra::FieldMatrix& b);

// Binary-multiplication embedding of the convolution: both factors are the
// doubled, zero-padded encodings with ceil(log2 n)-bit blocks. Extraction
// reads the blocks of the integer product and reassembles the convolution
// entries over the integers. Instances whose block values reach 2^b carry
// into the next block; they are detected and refused (overflow = true).
struct BinaryMultEmbedding {
  std::size_t n = 0;
  std::size_t block_bits = 0;
  std::vector<std::uint8_t> u_prime_bits, v_prime_bits;  // LSB first
  std::string product_hex;
  std::vector<std::uint64_t> blocks;      // expected block values (carry-free reading)
  bool overflow = false;
  std::vector<std::uint64_t> convolution; // u * v over Z, empty when refused
};

BinaryMultEmbedding embed_binary_mult(std::span<const std::uint8_t> u,
                                      std::span<const std::uint8_t> v);

// The convolution defined by the circulant-style matrix of make_conv_matrix,
// computed over the integers: w_i = sum_j u[(i - j - 1) mod n] v[j].
std::vector<std::uint64_t> integer_convolution(std::span<const std::uint8_t> u,
                                               std::span<const std::uint8_t> v);

// If A and B are (gamma n, gamma n)-rigid then A kron B is
// (gamma^2 n^2, gamma^2 n^2, gamma^2)-rigid; checked by brute force.
struct TensorRigidityResult {
  bool preconditions_hold = false;  // A and B certified rigid
  bool verified = false;            // tensor rigidity of A kron B
  rigidity::RigidityParams tensor_params;
};

TensorRigidityResult tensor_rigidity_verify(
    const algebra::FieldMatrix& a, const algebra::FieldMatrix& b, double gamma,
    std::uint64_t budget = rigidity::kDefaultRigidityBudget);

}  // namespace qts::reductions
