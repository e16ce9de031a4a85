#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sgwt/chebyshev.hpp"
#include "sgwt/coefficients.hpp"
#include "sgwt/kernels.hpp"
#include "sgwt/laplacian.hpp"
#include "sgwt/spectral.hpp"

namespace sgwt {

/// Everything needed to apply the fast transform to many signals: one
/// Chebyshev polynomial per band (p_0 ~ h, p_j ~ g(t_j .)) and
/// P = sum_j p_j^2 for the frame operator. Immutable and shareable.
class PreparedTransform {
 public:
  PreparedTransform(TransformDesign design, std::shared_ptr<const LaplacianOperator> L,
                    std::vector<ChebyshevExpansion> bands);

  const TransformDesign& design() const { return design_; }
  const LaplacianOperator& laplacian() const { return *laplacian_; }
  std::size_t num_vertices() const { return laplacian_->size(); }
  std::size_t num_bands() const { return bands_.size(); }

  std::span<const ChebyshevExpansion> bands() const { return bands_; }
  const ChebyshevExpansion& frame_polynomial() const { return frame_poly_; }
  std::vector<std::size_t> degrees() const;

  /// sup_error of each band polynomial against its kernel.
  std::vector<double> band_sup_errors(std::size_t n_grid = 10000) const;

  /// Min / max of P over a uniform grid on [0, lambda_max].
  FrameBounds polynomial_frame_bounds(std::size_t samples = 10000) const;

 private:
  TransformDesign design_;
  std::shared_ptr<const LaplacianOperator> laplacian_;
  std::vector<ChebyshevExpansion> bands_;
  ChebyshevExpansion frame_poly_;
};

inline constexpr std::size_t kDefaultDegree = 50;

/// Expands every band kernel on [0, design.lambda_max]. `degrees` holds one
/// entry per band (J + 1) or a single entry applied to all.
PreparedTransform prepare(const TransformDesign& design,
                          std::shared_ptr<const LaplacianOperator> L,
                          std::vector<std::size_t> degrees = {kDefaultDegree});

/// Approximate coefficients (p_0(L) f, ..., p_J(L) f) from one shared
/// recurrence sweep.
CoefficientSet forward(const PreparedTransform& pt, std::span<const double> f);

/// Exact adjoint of forward(): sum_j p_j(L) eta_j.
std::vector<double> adjoint(const PreparedTransform& pt, const CoefficientSet& c);

/// adjoint(forward(f)) as a single application of P(L).
std::vector<double> frame_operator(const PreparedTransform& pt, std::span<const double> f);

struct CgOptions {
  double tol = 1e-8;
  std::size_t max_iter = 500;
};

struct Reconstruction {
  std::vector<double> signal;
  std::size_t iterations = 0;
  double relative_residual = 0.0;
  bool converged = false;
  std::vector<std::string> warnings;
};

/// Least-squares inverse of forward(): conjugate gradients on
/// P(L) f = adjoint(c) from a zero initial guess. Does not throw on
/// non-convergence; check `converged`.
Reconstruction pseudoinverse(const PreparedTransform& pt, const CoefficientSet& c,
                             const CgOptions& opts = {});

struct ContinuousInverseResult {
  std::vector<double> reconstruction;
  std::vector<double> target;  // f minus its chi_0 component
  double relative_error = 0.0;
  double admissibility = 0.0;  // C_g used for normalization
};

/// Discretized continuous-scale reconstruction on the oracle. Integrates
/// int g(t lambda_l)^2 / t dt by the trapezoid rule in log t over
/// `num_scales` points on [t_min, t_max] and returns
/// (1/C_g) sum_l I_l fhat(l) chi_l.
ContinuousInverseResult continuous_inverse_check(const EigenDecomposition& eig,
                                                 const KernelSpec& kernel,
                                                 std::span<const double> f,
                                                 std::size_t num_scales, double t_min,
                                                 double t_max);

/// Same with the default scale range [1e-4 / lambda_{N-1}, 1e4 / lambda_1].
ContinuousInverseResult continuous_inverse_check(const EigenDecomposition& eig,
                                                 const KernelSpec& kernel,
                                                 std::span<const double> f,
                                                 std::size_t num_scales = 400);

}  // namespace sgwt
