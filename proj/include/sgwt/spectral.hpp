#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "sgwt/coefficients.hpp"
#include "sgwt/kernels.hpp"
#include "sgwt/laplacian.hpp"

namespace sgwt {

/// Full eigensystem of a symmetric matrix: eigenvalues ascending,
/// orthonormal eigenvectors stored one per row.
struct EigenDecomposition {
  std::size_t n = 0;
  std::vector<double> eigenvalues;
  std::vector<double> eigenvectors;  // row l is chi_l

  std::span<const double> eigenvector(std::size_t l) const {
    return {eigenvectors.data() + l * n, n};
  }
};

inline constexpr std::size_t kDefaultOracleLimit = 2000;

/// Dense symmetric eigensolver (Householder tridiagonalization followed by
/// implicit-shift QL). `dense` is row-major n x n. Each eigenvector is
/// signed so that its first component with magnitude above 1e-12 is
/// positive. Throws NumericalError if QL fails to converge.
EigenDecomposition symmetric_eigendecomposition(std::span<const double> dense, std::size_t n);

/// Oracle eigendecomposition of L; throws NumericalError when
/// N > max_vertices.
EigenDecomposition full_eigendecomposition(const LaplacianOperator& L,
                                           std::size_t max_vertices = kDefaultOracleLimit);

/// fhat(l) = <chi_l, f>.
std::vector<double> graph_fourier(const EigenDecomposition& eig, std::span<const double> f);

/// f(n) = sum_l fhat(l) chi_l(n).
std::vector<double> inverse_graph_fourier(const EigenDecomposition& eig,
                                          std::span<const double> fhat);

/// k(L) f = sum_l k(lambda_l) fhat(l) chi_l, with eigenvalues clamped at 0.
std::vector<double> spectral_filter(const EigenDecomposition& eig,
                                    const std::function<double(double)>& kernel,
                                    std::span<const double> f);

/// psi_{t,n} = g(tL) delta_n for an arbitrary kernel g.
std::vector<double> exact_wavelet(const EigenDecomposition& eig,
                                  const std::function<double(double)>& kernel, double t,
                                  std::size_t n);
std::vector<double> exact_wavelet(const EigenDecomposition& eig, const TransformDesign& design,
                                  double t, std::size_t n);

/// Band 0 = h(L) f, band j = g(t_j L) f, all through the eigenbasis.
CoefficientSet exact_transform(const EigenDecomposition& eig, const TransformDesign& design,
                               std::span<const double> f);

struct PowerIterationOptions {
  double tol = 1e-5;  // on the 2-norm change of the unit iterate
  std::size_t max_iter = 500;
  double safety_factor = 1.01;
  std::uint64_t seed = 0x5367574Full;
};

struct SpectrumBound {
  double lambda_max = 0.0;  // safety_factor * estimate
  double estimate = 0.0;    // raw Rayleigh quotient
  std::size_t iterations = 0;
  bool converged = false;
};

/// Upper bound on the largest eigenvalue of L by power iteration from a
/// fixed-seed random start. The estimate is the largest Rayleigh quotient
/// seen; `converged` is false when max_iter ran out first. Throws
/// InvalidArgument if L has no edges.
SpectrumBound estimate_lambda_max(const LaplacianOperator& L, const PowerIterationOptions& opts = {});

}  // namespace sgwt
