#include "sgwt/transform.hpp"

#include <algorithm>
#include <cmath>

#include "sgwt/error.hpp"
#include "sgwt/parallel/vector_ops.hpp"

namespace sgwt {

namespace {

void check_signal(const PreparedTransform& pt, std::size_t length) {
  if (length != pt.num_vertices()) {
    throw InvalidArgument("signal length " + std::to_string(length) + " does not match N = " +
                          std::to_string(pt.num_vertices()));
  }
}

void check_coefficients(const PreparedTransform& pt, const CoefficientSet& c) {
  if (c.num_vertices() != pt.num_vertices() || c.num_bands() != pt.num_bands()) {
    throw InvalidArgument("coefficient set has shape " + std::to_string(c.num_bands()) + " x " +
                          std::to_string(c.num_vertices()) + ", transform expects " +
                          std::to_string(pt.num_bands()) + " x " +
                          std::to_string(pt.num_vertices()));
  }
}

}  // namespace

PreparedTransform::PreparedTransform(TransformDesign design,
                                     std::shared_ptr<const LaplacianOperator> L,
                                     std::vector<ChebyshevExpansion> bands)
    : design_(std::move(design)),
      laplacian_(std::move(L)),
      bands_(std::move(bands)),
      frame_poly_(square_and_sum(bands_)) {
  if (!laplacian_) throw InvalidArgument("prepared transform needs a Laplacian");
  if (bands_.size() != design_.num_bands()) {
    throw InvalidArgument("expected one expansion per band (J + 1)");
  }
}

std::vector<std::size_t> PreparedTransform::degrees() const {
  std::vector<std::size_t> out;
  for (const auto& b : bands_) out.push_back(b.degree());
  return out;
}

std::vector<double> PreparedTransform::band_sup_errors(std::size_t n_grid) const {
  std::vector<double> out;
  for (std::size_t b = 0; b < bands_.size(); ++b) {
    out.push_back(sup_error(bands_[b], [&](double x) { return design_.band_kernel(b, x); }, n_grid));
  }
  return out;
}

FrameBounds PreparedTransform::polynomial_frame_bounds(std::size_t samples) const {
  if (samples < 2) throw InvalidArgument("need at least two samples");
  FrameBounds fb{eval_scalar(frame_poly_, 0.0), eval_scalar(frame_poly_, 0.0)};
  for (std::size_t i = 1; i < samples; ++i) {
    const double x = design_.lambda_max * static_cast<double>(i) / static_cast<double>(samples - 1);
    const double v = eval_scalar(frame_poly_, x);
    fb.A = std::min(fb.A, v);
    fb.B = std::max(fb.B, v);
  }
  return fb;
}

PreparedTransform prepare(const TransformDesign& design, std::shared_ptr<const LaplacianOperator> L,
                          std::vector<std::size_t> degrees) {
  if (degrees.size() == 1) degrees.assign(design.num_bands(), degrees.front());
  if (degrees.size() != design.num_bands()) {
    throw InvalidArgument("need one Chebyshev degree per band: got " +
                          std::to_string(degrees.size()) + ", J + 1 = " +
                          std::to_string(design.num_bands()));
  }
  std::vector<ChebyshevExpansion> bands;
  bands.reserve(design.num_bands());
  for (std::size_t b = 0; b < design.num_bands(); ++b) {
    bands.push_back(compute_coefficients([&](double x) { return design.band_kernel(b, x); },
                                         degrees[b], design.lambda_max));
  }
  return PreparedTransform(design, std::move(L), std::move(bands));
}

CoefficientSet forward(const PreparedTransform& pt, std::span<const double> f) {
  check_signal(pt, f.size());
  const auto bands = apply_bands(pt.bands(), pt.laplacian(), f);
  CoefficientSet out(pt.num_vertices(), pt.num_bands() - 1);
  for (std::size_t b = 0; b < bands.size(); ++b) {
    std::copy(bands[b].begin(), bands[b].end(), out.band(b).begin());
  }
  return out;
}

std::vector<double> adjoint(const PreparedTransform& pt, const CoefficientSet& c) {
  check_coefficients(pt, c);
  std::vector<double> out(pt.num_vertices(), 0.0);
  for (std::size_t b = 0; b < pt.num_bands(); ++b) {
    const auto term = apply_to_vector(pt.bands()[b], pt.laplacian(), c.band(b));
    par::axpy(1.0, term, out);
  }
  return out;
}

std::vector<double> frame_operator(const PreparedTransform& pt, std::span<const double> f) {
  check_signal(pt, f.size());
  return apply_to_vector(pt.frame_polynomial(), pt.laplacian(), f);
}

Reconstruction pseudoinverse(const PreparedTransform& pt, const CoefficientSet& c,
                             const CgOptions& opts) {
  check_coefficients(pt, c);
  if (!(opts.tol > 0.0)) throw InvalidArgument("CG tolerance must be positive");

  Reconstruction out;
  const FrameBounds fb = pt.polynomial_frame_bounds();
  if (!(fb.A > 1e-10 * fb.B)) {
    out.warnings.push_back("frame lower bound is near zero (A = " + std::to_string(fb.A) +
                           "); the inverse is ill-conditioned");
  }
  if (pt.laplacian().num_components() > 1) {
    out.warnings.push_back("graph has " + std::to_string(pt.laplacian().num_components()) +
                           " components; each component mean is recovered only through the "
                           "scaling band");
  }

  const std::size_t n = pt.num_vertices();
  const std::vector<double> rhs = adjoint(pt, c);
  const double rhs_norm = std::sqrt(par::dot(rhs, rhs));
  out.signal.assign(n, 0.0);
  if (rhs_norm == 0.0) {
    out.converged = true;
    return out;
  }

  std::vector<double> r = rhs;
  std::vector<double> p = r;
  double rr = par::dot(r, r);
  for (std::size_t it = 1; it <= opts.max_iter; ++it) {
    const auto Ap = frame_operator(pt, p);
    const double pAp = par::dot(p, Ap);
    if (!(pAp > 0.0)) {
      out.warnings.push_back("frame operator lost positive definiteness during CG");
      break;
    }
    const double alpha = rr / pAp;
    par::axpy(alpha, p, out.signal);
    par::axpy(-alpha, Ap, r);
    const double rr_next = par::dot(r, r);
    out.iterations = it;
    if (std::sqrt(rr_next) <= opts.tol * rhs_norm) {
      out.converged = true;
      break;
    }
    par::xpby(r, rr_next / rr, p);
    rr = rr_next;
  }

  // Report the true residual rather than the recursively updated one.
  auto residual = frame_operator(pt, out.signal);
  par::axpy(-1.0, rhs, residual);
  out.relative_residual = std::sqrt(par::dot(residual, residual)) / rhs_norm;
  return out;
}

ContinuousInverseResult continuous_inverse_check(const EigenDecomposition& eig,
                                                 const KernelSpec& kernel,
                                                 std::span<const double> f,
                                                 std::size_t num_scales, double t_min,
                                                 double t_max) {
  if (num_scales < 2) throw InvalidArgument("need at least two scales");
  if (!(t_min > 0.0) || !(t_max > t_min) || !std::isfinite(t_max)) {
    throw InvalidArgument("scale range must satisfy 0 < t_min < t_max");
  }
  ContinuousInverseResult out;
  out.admissibility = admissibility_constant(kernel);

  const double lambda_top = std::max(eig.eigenvalues.back(), 0.0);
  const double zero_tol = 1e-10 * std::max(1.0, lambda_top);
  auto fhat = graph_fourier(eig, f);
  auto target_hat = fhat;

  const double log_lo = std::log(t_min);
  const double step = (std::log(t_max) - log_lo) / static_cast<double>(num_scales - 1);
  for (std::size_t l = 0; l < eig.n; ++l) {
    const double lambda = eig.eigenvalues[l];
    if (lambda <= zero_tol) {
      fhat[l] = 0.0;
      target_hat[l] = 0.0;
      continue;
    }
    double integral = 0.0;
    for (std::size_t i = 0; i < num_scales; ++i) {
      const double t = std::exp(log_lo + step * static_cast<double>(i));
      const double g = kernel(t * lambda);
      const double w = (i == 0 || i + 1 == num_scales) ? 0.5 : 1.0;
      integral += w * g * g;
    }
    fhat[l] *= integral * step / out.admissibility;
  }
  out.reconstruction = inverse_graph_fourier(eig, fhat);
  out.target = inverse_graph_fourier(eig, target_hat);

  double err = 0.0;
  double ref = 0.0;
  for (std::size_t m = 0; m < eig.n; ++m) {
    const double d = out.reconstruction[m] - out.target[m];
    err += d * d;
    ref += out.target[m] * out.target[m];
  }
  out.relative_error = ref > 0.0 ? std::sqrt(err / ref) : std::sqrt(err);
  return out;
}

ContinuousInverseResult continuous_inverse_check(const EigenDecomposition& eig,
                                                 const KernelSpec& kernel,
                                                 std::span<const double> f,
                                                 std::size_t num_scales) {
  const double lambda_top = eig.eigenvalues.back();
  const double zero_tol = 1e-10 * std::max(1.0, lambda_top);
  const auto first_positive = std::find_if(eig.eigenvalues.begin(), eig.eigenvalues.end(),
                                           [&](double x) { return x > zero_tol; });
  if (first_positive == eig.eigenvalues.end()) {
    throw InvalidArgument("continuous inverse needs a nonzero eigenvalue");
  }
  return continuous_inverse_check(eig, kernel, f, num_scales, 1e-4 / lambda_top,
                                  1e4 / *first_positive);
}

}  // namespace sgwt
