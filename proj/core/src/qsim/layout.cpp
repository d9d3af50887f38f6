#include "qts/qsim/layout.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qts/support/errors.hpp"

namespace qts::qsim {

RegisterLayout::RegisterLayout(algebra::Alphabet alphabet, std::size_t n_inputs,
                               std::size_t work_dim, SimLimits limits)
    : alphabet_(std::move(alphabet)),
      n_(n_inputs),
      work_dim_(work_dim),
      d_(alphabet_.size()),
      limits_(limits) {
  if (n_ == 0) throw std::invalid_argument("RegisterLayout: need at least one input register");
  if (work_dim_ == 0) throw std::invalid_argument("RegisterLayout: work dimension must be >= 1");
  ipw_dim_ = (n_ + 1) * d_ * work_dim_;

  // total = ipw_dim * (d+1)^n, refused when it exceeds the cap.
  unsigned __int128 total = ipw_dim_;
  for (std::size_t j = 0; j < n_; ++j) {
    total *= (d_ + 1);
    if (total > limits_.max_dimension) {
      throw budget_error("RegisterLayout: dimension cap exceeded (cap " +
                         std::to_string(limits_.max_dimension) + ")");
    }
  }
  total_dim_ = static_cast<std::size_t>(total);

  x_stride_.resize(n_);
  std::uint64_t stride = ipw_dim_;
  for (std::size_t j = 0; j < n_; ++j) {
    x_stride_[j] = stride;
    stride *= (d_ + 1);
  }

  omega_.resize(d_);
  for (std::size_t t = 0; t < d_; ++t) {
    const double ang = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(d_);
    omega_[t] = {std::cos(ang), std::sin(ang)};
  }
}

std::uint64_t RegisterLayout::pack(const BasisLabel& l) const {
  if (l.i > n_ || l.p >= d_ || l.w >= work_dim_ || l.x.size() != n_) {
    throw std::invalid_argument("pack: label outside layout ranges");
  }
  std::uint64_t key = ipw_index(l.i, l.p, l.w);
  for (std::size_t j = 0; j < n_; ++j) {
    if (l.x[j] > d_) throw std::invalid_argument("pack: register code out of range");
    key += static_cast<std::uint64_t>(l.x[j]) * x_stride_[j];
  }
  return key;
}

BasisLabel RegisterLayout::unpack(std::uint64_t key) const {
  BasisLabel l;
  l.i = static_cast<std::uint32_t>(i_of(key));
  l.p = static_cast<std::uint32_t>(p_of(key));
  l.w = static_cast<std::uint32_t>(w_of(key));
  l.x.resize(n_);
  for (std::size_t j = 0; j < n_; ++j) l.x[j] = x_code(key, j);
  return l;
}

}  // namespace qts::qsim
