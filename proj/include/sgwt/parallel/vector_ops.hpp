#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace sgwt {

/// Read-only view of a square matrix in compressed sparse row form.
struct CsrView {
  std::span<const std::size_t> row_offsets;  // size rows + 1
  std::span<const std::uint32_t> columns;
  std::span<const double> values;

  std::size_t rows() const { return row_offsets.empty() ? 0 : row_offsets.size() - 1; }
};

// The hot loops of the transform. Every kernel exists twice: `par` is the
// production version (OpenMP over rows / entries when compiled with
// SGWT_HAVE_OPENMP), `ref` is the plain serial loop the tests compare against.
//
// Each output entry is computed by exactly one thread from the same operands
// in the same order, so `par` and `ref` agree bit for bit. dot() uses a fixed
// block decomposition that does not depend on the thread count.

#define SGWT_DECLARE_VECTOR_OPS                                                   \
  /* y = A x */                                                                   \
  void spmv(const CsrView& a, std::span<const double> x, std::span<double> y);    \
  /* out = (A x - shift x) / shift: first shifted Chebyshev term. */              \
  void chebyshev_first(const CsrView& a, double shift, std::span<const double> x, \
                       std::span<double> out);                                    \
  /* out = (2/shift)(A x - shift x) - prev. out may alias prev. */                \
  void chebyshev_step(const CsrView& a, double shift, std::span<const double> x,  \
                      std::span<const double> prev, std::span<double> out);       \
  /* y += alpha x */                                                              \
  void axpy(double alpha, std::span<const double> x, std::span<double> y);        \
  /* y = alpha x */                                                               \
  void scale_into(double alpha, std::span<const double> x, std::span<double> y);  \
  /* y = x + beta y */                                                            \
  void xpby(std::span<const double> x, double beta, std::span<double> y);         \
  double dot(std::span<const double> x, std::span<const double> y);

namespace par {
SGWT_DECLARE_VECTOR_OPS
/// Threads the parallel kernels will use (1 without OpenMP).
int max_threads();
}  // namespace par

namespace ref {
SGWT_DECLARE_VECTOR_OPS
}  // namespace ref

#undef SGWT_DECLARE_VECTOR_OPS

/// Block length for the deterministic reduction in dot().
inline constexpr std::size_t kDotBlock = 4096;

}  // namespace sgwt
