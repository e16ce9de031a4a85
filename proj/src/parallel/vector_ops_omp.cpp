#include "sgwt/parallel/vector_ops.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#ifdef SGWT_HAVE_OPENMP
#include <omp.h>
#endif

namespace sgwt::par {

namespace {

// Below this many rows the fork/join costs more than the loop.
constexpr std::int64_t kParallelThreshold = 2048;

inline double row_dot(const CsrView& a, std::size_t row, std::span<const double> x) {
  double sum = 0.0;
  for (std::size_t k = a.row_offsets[row]; k < a.row_offsets[row + 1]; ++k) {
    sum += a.values[k] * x[a.columns[k]];
  }
  return sum;
}

}  // namespace

int max_threads() {
#ifdef SGWT_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void spmv(const CsrView& a, std::span<const double> x, std::span<double> y) {
  const auto n = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::int64_t i = 0; i < n; ++i) {
    y[i] = row_dot(a, static_cast<std::size_t>(i), x);
  }
}

void chebyshev_first(const CsrView& a, double shift, std::span<const double> x,
                     std::span<double> out) {
  const auto n = static_cast<std::int64_t>(a.rows());
  const double inv = 1.0 / shift;
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::int64_t i = 0; i < n; ++i) {
    out[i] = inv * (row_dot(a, static_cast<std::size_t>(i), x) - shift * x[i]);
  }
}

void chebyshev_step(const CsrView& a, double shift, std::span<const double> x,
                    std::span<const double> prev, std::span<double> out) {
  const auto n = static_cast<std::int64_t>(a.rows());
  const double two_inv = 2.0 / shift;
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::int64_t i = 0; i < n; ++i) {
    out[i] = two_inv * (row_dot(a, static_cast<std::size_t>(i), x) - shift * x[i]) - prev[i];
  }
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  const auto n = static_cast<std::int64_t>(x.size());
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::int64_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale_into(double alpha, std::span<const double> x, std::span<double> y) {
  const auto n = static_cast<std::int64_t>(x.size());
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::int64_t i = 0; i < n; ++i) y[i] = alpha * x[i];
}

void xpby(std::span<const double> x, double beta, std::span<double> y) {
  const auto n = static_cast<std::int64_t>(x.size());
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::int64_t i = 0; i < n; ++i) y[i] = x[i] + beta * y[i];
}

double dot(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  const auto blocks = static_cast<std::int64_t>((n + kDotBlock - 1) / kDotBlock);
  std::vector<double> partial(static_cast<std::size_t>(blocks), 0.0);
#pragma omp parallel for schedule(static) if (blocks > 1)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::size_t start = static_cast<std::size_t>(b) * kDotBlock;
    const std::size_t stop = std::min(n, start + kDotBlock);
    double sum = 0.0;
    for (std::size_t i = start; i < stop; ++i) sum += x[i] * y[i];
    partial[static_cast<std::size_t>(b)] = sum;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

}  // namespace sgwt::par
