#include "qts/reductions/embeddings.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace qts::reductions {

namespace {

using algebra::FieldMatrix;
using algebra::PrimeField;

void require_square_same(const FieldMatrix& a, const FieldMatrix& b, const char* op) {
  if (!(a.field() == b.field())) throw std::invalid_argument(std::string(op) + ": field mismatch");
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw std::invalid_argument(std::string(op) + ": inputs must be square and equal-sized");
  }
}

// Stacks the transposed rows of M into one column vector (n^2 x 1).
FieldMatrix vec_rows(const FieldMatrix& m) {
  FieldMatrix v(m.field(), m.rows() * m.cols(), 1);
  std::size_t t = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.set(t++, 0, m(r, c));
  return v;
}

FieldMatrix block_of(const FieldMatrix& m, const EmbeddingResult::Block& b) {
  FieldMatrix out(m.field(), b.rows, b.cols);
  for (std::size_t r = 0; r < b.rows; ++r)
    for (std::size_t c = 0; c < b.cols; ++c) out.set(r, c, m(b.row0 + r, b.col0 + c));
  return out;
}

void place_block(FieldMatrix& m, std::size_t r0, std::size_t c0, const FieldMatrix& b,
                 bool negate = false) {
  const PrimeField& f = m.field();
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) {
      m.set(r0 + r, c0 + c, negate ? f.neg(b(r, c)) : b(r, c));
    }
}

EmbeddingResult finish(FieldMatrix constructed, FieldMatrix derived,
                       EmbeddingResult::Block block, FieldMatrix target) {
  FieldMatrix extracted = block_of(derived, block);
  const bool ok = extracted == target;
  return EmbeddingResult{std::move(constructed), std::move(derived), block, std::move(extracted),
                         std::move(target), ok};
}

}  // namespace

EmbeddingResult triple_product_via_kron(const FieldMatrix& a, const FieldMatrix& b,
                                        const FieldMatrix& c) {
  require_square_same(a, b, "triple_product_via_kron");
  require_square_same(b, c, "triple_product_via_kron");
  const FieldMatrix op = algebra::kron(a, c.transpose());
  const FieldMatrix derived = algebra::mat_mul(op, vec_rows(b));
  const FieldMatrix target = vec_rows(algebra::mat_mul(algebra::mat_mul(a, b), c));
  EmbeddingResult::Block block{0, 0, derived.rows(), 1};
  return finish(op, derived, block, target);
}

EmbeddingResult embed_cube(const FieldMatrix& a, const FieldMatrix& b, const FieldMatrix& c) {
  require_square_same(a, b, "embed_cube");
  require_square_same(b, c, "embed_cube");
  const std::size_t n = a.rows();
  FieldMatrix m(a.field(), 4 * n, 4 * n);
  place_block(m, 0, n, a);
  place_block(m, n, 2 * n, b);
  place_block(m, 2 * n, 3 * n, c);
  const FieldMatrix m3 = algebra::mat_mul(algebra::mat_mul(m, m), m);
  const FieldMatrix target = algebra::mat_mul(algebra::mat_mul(a, b), c);
  return finish(m, m3, EmbeddingResult::Block{0, 3 * n, n, n}, target);
}

EmbeddingResult embed_inverse(const FieldMatrix& a, const FieldMatrix& b, const FieldMatrix& c) {
  require_square_same(a, b, "embed_inverse");
  require_square_same(b, c, "embed_inverse");
  const std::size_t n = a.rows();
  FieldMatrix m = FieldMatrix::identity(a.field(), 4 * n);
  place_block(m, 0, n, a, /*negate=*/true);
  place_block(m, n, 2 * n, b, /*negate=*/true);
  place_block(m, 2 * n, 3 * n, c, /*negate=*/true);
  const FieldMatrix inv = algebra::mat_inverse(m);  // unit triangular, always invertible
  const FieldMatrix target = algebra::mat_mul(algebra::mat_mul(a, b), c);
  return finish(m, inv, EmbeddingResult::Block{0, 3 * n, n, n}, target);
}

EmbeddingResult embed_square(const FieldMatrix& a, const FieldMatrix& b) {
  require_square_same(a, b, "embed_square");
  const std::size_t n = a.rows();
  FieldMatrix m(a.field(), 3 * n, 3 * n);
  place_block(m, 0, n, a);
  place_block(m, n, 2 * n, b);
  const FieldMatrix m2 = algebra::mat_mul(m, m);
  const FieldMatrix target = algebra::mat_mul(a, b);
  return finish(m, m2, EmbeddingResult::Block{0, 2 * n, n, n}, target);
}

std::vector<std::uint64_t> integer_convolution(std::span<const std::uint8_t> u,
                                               std::span<const std::uint8_t> v) {
  if (u.size() != v.size()) throw std::invalid_argument("integer_convolution: length mismatch");
  const std::size_t n = u.size();
  std::vector<std::uint64_t> w(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w[i] += static_cast<std::uint64_t>(u[(i + n - j - 1) % n]) * v[j];
  return w;
}

BinaryMultEmbedding embed_binary_mult(std::span<const std::uint8_t> u,
                                      std::span<const std::uint8_t> v) {
  using boost::multiprecision::cpp_int;
  if (u.size() != v.size()) throw std::invalid_argument("embed_binary_mult: length mismatch");
  const std::size_t n = u.size();
  if (n < 4) throw std::invalid_argument("embed_binary_mult: need n >= 4");

  BinaryMultEmbedding out;
  out.n = n;
  out.block_bits = static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n)) - 1e-12));

  const auto encode = [&](std::span<const std::uint8_t> bits) {
    // bit j of the input sits at block j of each copy; two copies.
    cpp_int val = 0;
    std::vector<std::uint8_t> packed(2 * n * out.block_bits, 0);
    for (std::size_t copy = 0; copy < 2; ++copy) {
      for (std::size_t j = 0; j < n; ++j) {
        if (bits[j]) {
          const std::size_t pos = (copy * n + j) * out.block_bits;
          packed[pos] = 1;
          val += cpp_int(1) << static_cast<unsigned>(pos);
        }
      }
    }
    return std::pair<cpp_int, std::vector<std::uint8_t>>{val, std::move(packed)};
  };

  auto [u_val, u_bits] = encode(u);
  auto [v_val, v_bits] = encode(v);
  out.u_prime_bits = std::move(u_bits);
  out.v_prime_bits = std::move(v_bits);

  const cpp_int product = u_val * v_val;
  {
    std::ostringstream hex;
    hex << std::hex << product;
    out.product_hex = hex.str();
  }

  // Linear convolution coefficients c_s of the single copies.
  std::vector<std::uint64_t> c(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i + j] += static_cast<std::uint64_t>(u[i]) * v[j];

  // Carry-free block values of the doubled product: e_m = c_m + 2 c_{m-n} + c_{m-2n}.
  // Any e_m reaching 2^b would carry into the next block, so the instance is refused.
  const std::size_t total_blocks = 4 * n;
  std::vector<std::uint64_t> expected(total_blocks, 0);
  const std::uint64_t block_cap = std::uint64_t{1} << out.block_bits;
  for (std::size_t mblk = 0; mblk < total_blocks; ++mblk) {
    std::uint64_t e = 0;
    if (mblk < c.size()) e += c[mblk];
    if (mblk >= n && mblk - n < c.size()) e += 2 * c[mblk - n];
    if (mblk >= 2 * n && mblk - 2 * n < c.size()) e += c[mblk - 2 * n];
    expected[mblk] = e;
    if (e >= block_cap) out.overflow = true;
  }
  if (out.overflow) {
    out.blocks = std::move(expected);  // report the offending values
    return out;
  }

  // Read the designated b-bit blocks off the integer product.
  out.blocks.assign(total_blocks, 0);
  for (std::size_t mblk = 0; mblk < total_blocks; ++mblk) {
    const cpp_int piece = (product >> static_cast<unsigned>(mblk * out.block_bits)) &
                          cpp_int(block_cap - 1);
    out.blocks[mblk] = piece.convert_to<std::uint64_t>();
    if (out.blocks[mblk] != expected[mblk]) {
      throw std::runtime_error("embed_binary_mult: block readback mismatch");
    }
  }
  // Convolution entries w_i = c_r + c_{n+r} at r = (i - 1) mod n, where the
  // low blocks give c_r and the middle blocks give c_{n+r} + 2 c_r.
  out.convolution.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = (i + n - 1) % n;
    const std::uint64_t c_r = out.blocks[r];
    const std::uint64_t c_nr = out.blocks[n + r] - 2 * c_r;
    out.convolution[i] = c_r + c_nr;
  }
  return out;
}

TensorRigidityResult tensor_rigidity_verify(const FieldMatrix& a, const FieldMatrix& b,
                                            double gamma, std::uint64_t budget) {
  require_square_same(a, b, "tensor_rigidity_verify");
  const std::size_t n = a.rows();
  TensorRigidityResult result;
  const double gn = gamma * static_cast<double>(n);
  const std::size_t gn_i = static_cast<std::size_t>(std::llround(gn));
  if (std::abs(gn - static_cast<double>(gn_i)) > 1e-9 || gn_i == 0) {
    throw std::invalid_argument("tensor_rigidity_verify: gamma n must be a positive integer");
  }
  const rigidity::RigidityParams base{gn_i, gn_i, 1.0};
  if (!rigidity::is_rigid(a, base, budget).rigid || !rigidity::is_rigid(b, base, budget).rigid) {
    result.preconditions_hold = false;
    return result;  // precondition fails: verification skipped
  }
  result.preconditions_hold = true;
  const double g2n2 = gamma * gamma * static_cast<double>(n) * static_cast<double>(n);
  const std::size_t k = static_cast<std::size_t>(std::ceil(g2n2 - 1e-9));
  result.tensor_params = rigidity::RigidityParams{k, k, gamma * gamma};
  result.verified = rigidity::is_rigid(algebra::kron(a, b), result.tensor_params, budget).rigid;
  return result;
}

}  // namespace qts::reductions
