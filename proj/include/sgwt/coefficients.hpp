#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sgwt/error.hpp"

namespace sgwt {

/// Transform output: J + 1 bands of N values, stored band-major. Band 0
/// holds the scaling coefficients, band j >= 1 the wavelet coefficients at
/// scale t_j (coarse to fine).
class CoefficientSet {
 public:
  CoefficientSet(std::size_t num_vertices, std::size_t num_scales)
      : n_(num_vertices), J_(num_scales), data_(num_vertices * (num_scales + 1), 0.0) {}

  CoefficientSet(std::size_t num_vertices, std::size_t num_scales, std::vector<double> data)
      : n_(num_vertices), J_(num_scales), data_(std::move(data)) {
    if (data_.size() != n_ * (J_ + 1)) {
      throw InvalidArgument("coefficient data has " + std::to_string(data_.size()) +
                            " values, expected N(J+1) = " + std::to_string(n_ * (J_ + 1)));
    }
  }

  std::size_t num_vertices() const { return n_; }
  std::size_t num_scales() const { return J_; }
  std::size_t num_bands() const { return J_ + 1; }
  std::size_t size() const { return data_.size(); }

  std::span<const double> band(std::size_t j) const { return {data_.data() + j * n_, n_}; }
  std::span<double> band(std::size_t j) { return {data_.data() + j * n_, n_}; }

  std::span<const double> values() const { return data_; }
  std::span<double> values() { return data_; }

 private:
  std::size_t n_;
  std::size_t J_;
  std::vector<double> data_;
};

}  // namespace sgwt
