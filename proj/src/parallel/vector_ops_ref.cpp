#include "sgwt/parallel/vector_ops.hpp"

#include <algorithm>

namespace sgwt::ref {

namespace {

double row_dot(const CsrView& a, std::size_t row, std::span<const double> x) {
  double sum = 0.0;
  for (std::size_t k = a.row_offsets[row]; k < a.row_offsets[row + 1]; ++k) {
    sum += a.values[k] * x[a.columns[k]];
  }
  return sum;
}

}  // namespace

void spmv(const CsrView& a, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < a.rows(); ++i) y[i] = row_dot(a, i, x);
}

void chebyshev_first(const CsrView& a, double shift, std::span<const double> x,
                     std::span<double> out) {
  const double inv = 1.0 / shift;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    out[i] = inv * (row_dot(a, i, x) - shift * x[i]);
  }
}

void chebyshev_step(const CsrView& a, double shift, std::span<const double> x,
                    std::span<const double> prev, std::span<double> out) {
  const double two_inv = 2.0 / shift;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    out[i] = two_inv * (row_dot(a, i, x) - shift * x[i]) - prev[i];
  }
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

void scale_into(double alpha, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = alpha * x[i];
}

void xpby(std::span<const double> x, double beta, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + beta * y[i];
}

double dot(std::span<const double> x, std::span<const double> y) {
  double total = 0.0;
  for (std::size_t start = 0; start < x.size(); start += kDotBlock) {
    const std::size_t stop = std::min(x.size(), start + kDotBlock);
    double partial = 0.0;
    for (std::size_t i = start; i < stop; ++i) partial += x[i] * y[i];
    total += partial;
  }
  return total;
}

}  // namespace sgwt::ref
