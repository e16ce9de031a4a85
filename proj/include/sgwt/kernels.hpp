#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace sgwt {

/// Band-pass wavelet kernel
///
///   g(x) = (x / x1)^alpha           x < x1
///          s(x)                     x1 <= x <= x2
///          (x2 / x)^beta            x > x2
///
/// where the cubic s is fixed by s(x1) = s(x2) = 1, s'(x1) = alpha / x1 and
/// s'(x2) = -beta / x2, so g is C^1 and g(x1) = g(x2) = 1.
struct KernelSpec {
  int alpha = 2;
  int beta = 2;
  double x1 = 1.0;
  double x2 = 2.0;
  /// s(x) = spline[0] + spline[1] x + spline[2] x^2 + spline[3] x^3.
  std::array<double, 4> spline{-5.0, 11.0, -6.0, 1.0};

  /// Builds the spec and solves for the spline. Throws InvalidArgument
  /// unless alpha, beta >= 1 and 0 < x1 < x2.
  static KernelSpec make(int alpha, int beta, double x1, double x2);

  double operator()(double x) const;
};

double eval_g(const KernelSpec& spec, double x);

/// Maximum of g, attained on [x1, x2]. Golden-section search to 1e-10.
double kernel_peak(const KernelSpec& spec);

/// Low-pass scaling kernel h(x) = gamma exp(-(x / (0.6 lambda_min))^4).
struct ScalingKernelSpec {
  double gamma = 1.0;
  double lambda_min = 1.0;

  double operator()(double x) const;
};

double eval_h(const ScalingKernelSpec& spec, double x);

/// Logarithmically equispaced scales from t_1 = x2 / lambda_min down to
/// t_J = x2 / lambda_max, with lambda_min = lambda_max / K.
std::vector<double> select_scales(double lambda_max, double K, std::size_t J, double x2 = 2.0);

/// Kernels, scales and spectrum bound of one transform.
struct TransformDesign {
  std::size_t J = 4;
  double K = 20.0;
  double lambda_max = 0.0;
  double lambda_min = 0.0;
  std::vector<double> scales;  // t_1 > ... > t_J
  KernelSpec kernel;
  ScalingKernelSpec scaling;

  static TransformDesign make(double lambda_max, std::size_t J = 4, double K = 20.0,
                              const KernelSpec& kernel = KernelSpec{});

  std::size_t num_bands() const { return J + 1; }

  /// Band 0 is h(x), band j >= 1 is g(t_j x).
  double band_kernel(std::size_t band, double x) const;
};

/// G(lambda) = h(lambda)^2 + sum_j g(t_j lambda)^2.
double partition_function(const TransformDesign& design, double lambda);

struct FrameBounds {
  double A = 0.0;
  double B = 0.0;
};

/// Extrema of G over `samples` uniform points on [0, lambda_max].
FrameBounds frame_bounds_grid(const TransformDesign& design, std::size_t samples = 10000);

/// Extrema of G over the given eigenvalues (negative round-off is clamped
/// to zero).
FrameBounds frame_bounds_exact(const TransformDesign& design, std::span<const double> eigenvalues);

/// C_g = int_0^inf g(x)^2 / x dx. The power-law pieces are integrated in
/// closed form (1/(2 alpha) and 1/(2 beta)); [x1, x2] uses composite
/// Simpson on `quad_points` nodes.
double admissibility_constant(const KernelSpec& spec, std::size_t quad_points = 1001);

}  // namespace sgwt
