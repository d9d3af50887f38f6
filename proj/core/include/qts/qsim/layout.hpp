#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qts/algebra/alphabet.hpp"

namespace qts::qsim {

struct SimLimits {
  std::size_t max_dimension = std::size_t{1} << 22;  // total basis states
  double prune_eps = 1e-13;                          // amplitude prune threshold
};

struct BasisLabel {
  std::uint32_t i = 0, p = 0, w = 0;
  std::vector<std::uint8_t> x;  // per register: 0..d-1 = alphabet index, d = bot
};

// Joint basis |i, p, w, x_1, ..., x_n> of the query model:
//   i in {0..n}        query index register, 0 = no query this step
//   p in {0..d-1}      phase register, 0 = identity query
//   w in {0..W-1}      work register
//   x_j in D u {bot}   oracle registers; bot marks "not yet recorded"
// Labels are packed into a single 64-bit key, mixed radix with the (i,p,w)
// part in the low digits.
class RegisterLayout {
 public:
  RegisterLayout(algebra::Alphabet alphabet, std::size_t n_inputs, std::size_t work_dim,
                 SimLimits limits = {});

  const algebra::Alphabet& alphabet() const { return alphabet_; }
  std::size_t n_inputs() const { return n_; }
  std::size_t d() const { return d_; }
  std::size_t work_dim() const { return work_dim_; }
  const SimLimits& limits() const { return limits_; }
  std::uint8_t bot_code() const { return static_cast<std::uint8_t>(d_); }

  std::size_t ipw_dim() const { return ipw_dim_; }
  std::size_t total_dimension() const { return total_dim_; }

  std::size_t ipw_index(std::size_t i, std::size_t p, std::size_t w) const {
    return (i * d_ + p) * work_dim_ + w;
  }
  std::uint64_t x_stride(std::size_t j) const { return x_stride_[j]; }
  std::uint64_t pack(const BasisLabel& l) const;
  BasisLabel unpack(std::uint64_t key) const;

  std::size_t i_of(std::uint64_t key) const { return (key % ipw_dim_) / (d_ * work_dim_); }
  std::size_t p_of(std::uint64_t key) const { return (key % ipw_dim_) / work_dim_ % d_; }
  std::size_t w_of(std::uint64_t key) const { return key % work_dim_; }
  std::uint8_t x_code(std::uint64_t key, std::size_t j) const {
    return static_cast<std::uint8_t>((key / x_stride_[j]) % (d_ + 1));
  }

  // omega_d^{p * nu}
  std::complex<double> query_phase(std::size_t p, std::size_t nu) const {
    return omega_[(p * nu) % d_];
  }

  // Structural equality (alphabet, register counts); limits are not compared.
  bool compatible(const RegisterLayout& o) const {
    return alphabet_ == o.alphabet_ && n_ == o.n_ && work_dim_ == o.work_dim_;
  }

 private:
  algebra::Alphabet alphabet_;
  std::size_t n_, work_dim_, d_;
  SimLimits limits_;
  std::size_t ipw_dim_ = 0, total_dim_ = 0;
  std::vector<std::uint64_t> x_stride_;
  std::vector<std::complex<double>> omega_;
};

}  // namespace qts::qsim
