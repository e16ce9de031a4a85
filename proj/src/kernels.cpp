#include "sgwt/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sgwt/error.hpp"

namespace sgwt {

namespace {

// Gaussian elimination with partial pivoting on a 4x4 system.
std::array<double, 4> solve4(std::array<std::array<double, 5>, 4> m) {
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < 4; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    }
    std::swap(m[col], m[pivot]);
    if (m[col][col] == 0.0) throw InvalidArgument("singular spline system");
    for (std::size_t r = col + 1; r < 4; ++r) {
      const double factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < 5; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  std::array<double, 4> x{};
  for (std::size_t i = 4; i-- > 0;) {
    double sum = m[i][4];
    for (std::size_t c = i + 1; c < 4; ++c) sum -= m[i][c] * x[c];
    x[i] = sum / m[i][i];
  }
  return x;
}

}  // namespace

KernelSpec KernelSpec::make(int alpha, int beta, double x1, double x2) {
  if (alpha < 1 || beta < 1) throw InvalidArgument("kernel exponents alpha, beta must be >= 1");
  if (!(x1 > 0.0) || !(x2 > x1) || !std::isfinite(x2)) {
    throw InvalidArgument("kernel transition points must satisfy 0 < x1 < x2");
  }
  KernelSpec spec;
  spec.alpha = alpha;
  spec.beta = beta;
  spec.x1 = x1;
  spec.x2 = x2;
  spec.spline = solve4({{
      {1.0, x1, x1 * x1, x1 * x1 * x1, 1.0},
      {1.0, x2, x2 * x2, x2 * x2 * x2, 1.0},
      {0.0, 1.0, 2.0 * x1, 3.0 * x1 * x1, alpha / x1},
      {0.0, 1.0, 2.0 * x2, 3.0 * x2 * x2, -beta / x2},
  }});
  return spec;
}

double KernelSpec::operator()(double x) const {
  if (x < x1) return std::pow(x / x1, alpha);
  if (x > x2) return std::pow(x2 / x, beta);
  return spline[0] + x * (spline[1] + x * (spline[2] + x * spline[3]));
}

double eval_g(const KernelSpec& spec, double x) { return spec(x); }

double kernel_peak(const KernelSpec& spec) {
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = spec.x1;
  double b = spec.x2;
  double c = b - ratio * (b - a);
  double d = a + ratio * (b - a);
  double fc = spec(c);
  double fd = spec(d);
  while (b - a > 1e-10) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - ratio * (b - a);
      fc = spec(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + ratio * (b - a);
      fd = spec(d);
    }
  }
  return std::max({spec(0.5 * (a + b)), spec(spec.x1), spec(spec.x2)});
}

double ScalingKernelSpec::operator()(double x) const {
  const double r = x / (0.6 * lambda_min);
  const double r2 = r * r;
  return gamma * std::exp(-r2 * r2);
}

double eval_h(const ScalingKernelSpec& spec, double x) { return spec(x); }

std::vector<double> select_scales(double lambda_max, double K, std::size_t J, double x2) {
  if (!(lambda_max > 0.0) || !std::isfinite(lambda_max)) {
    throw InvalidArgument("lambda_max must be positive and finite");
  }
  if (!(K > 1.0)) throw InvalidArgument("K must exceed 1");
  if (J < 1) throw InvalidArgument("J must be at least 1");
  if (!(x2 > 0.0)) throw InvalidArgument("x2 must be positive");
  const double lambda_min = lambda_max / K;
  const double t_first = x2 / lambda_min;
  const double t_last = x2 / lambda_max;
  if (J == 1) return {t_first};
  std::vector<double> t(J);
  const double log_first = std::log(t_first);
  const double step = (std::log(t_last) - log_first) / static_cast<double>(J - 1);
  for (std::size_t j = 0; j < J; ++j) t[j] = std::exp(log_first + static_cast<double>(j) * step);
  t.front() = t_first;
  t.back() = t_last;
  return t;
}

TransformDesign TransformDesign::make(double lambda_max, std::size_t J, double K,
                                      const KernelSpec& kernel) {
  TransformDesign d;
  d.scales = select_scales(lambda_max, K, J, kernel.x2);
  d.J = J;
  d.K = K;
  d.lambda_max = lambda_max;
  d.lambda_min = lambda_max / K;
  d.kernel = kernel;
  d.scaling = {kernel_peak(kernel), d.lambda_min};
  return d;
}

double TransformDesign::band_kernel(std::size_t band, double x) const {
  if (band == 0) return scaling(x);
  return kernel(scales.at(band - 1) * x);
}

double partition_function(const TransformDesign& design, double lambda) {
  double sum = 0.0;
  for (std::size_t b = 0; b < design.num_bands(); ++b) {
    const double v = design.band_kernel(b, lambda);
    sum += v * v;
  }
  return sum;
}

FrameBounds frame_bounds_grid(const TransformDesign& design, std::size_t samples) {
  if (samples < 2) throw InvalidArgument("frame bound grid needs at least two samples");
  FrameBounds fb{std::numeric_limits<double>::infinity(), 0.0};
  for (std::size_t i = 0; i < samples; ++i) {
    const double x = design.lambda_max * static_cast<double>(i) / static_cast<double>(samples - 1);
    const double G = partition_function(design, x);
    fb.A = std::min(fb.A, G);
    fb.B = std::max(fb.B, G);
  }
  return fb;
}

FrameBounds frame_bounds_exact(const TransformDesign& design, std::span<const double> eigenvalues) {
  if (eigenvalues.empty()) throw InvalidArgument("no eigenvalues given");
  FrameBounds fb{std::numeric_limits<double>::infinity(), 0.0};
  for (double lambda : eigenvalues) {
    const double G = partition_function(design, std::max(lambda, 0.0));
    fb.A = std::min(fb.A, G);
    fb.B = std::max(fb.B, G);
  }
  return fb;
}

double admissibility_constant(const KernelSpec& spec, std::size_t quad_points) {
  if (spec.alpha < 1) throw InvalidArgument("g must vanish at 0 for C_g to be finite");
  if (spec.beta < 1) throw InvalidArgument("beta = 0 makes the admissibility integral diverge");
  if (quad_points < 3) throw InvalidArgument("Simpson rule needs at least 3 points");
  const std::size_t intervals = (quad_points - 1) % 2 == 0 ? quad_points - 1 : quad_points;
  const double h = (spec.x2 - spec.x1) / static_cast<double>(intervals);
  auto integrand = [&](double x) {
    const double g = spec(x);
    return g * g / x;
  };
  double sum = integrand(spec.x1) + integrand(spec.x2);
  for (std::size_t i = 1; i < intervals; ++i) {
    sum += (i % 2 == 1 ? 4.0 : 2.0) * integrand(spec.x1 + h * static_cast<double>(i));
  }
  const double middle = sum * h / 3.0;
  return 1.0 / (2.0 * spec.alpha) + middle + 1.0 / (2.0 * spec.beta);
}

}  // namespace sgwt
