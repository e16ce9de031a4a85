#include "sgwt/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sgwt/error.hpp"

namespace sgwt {

ChebyshevExpansion::ChebyshevExpansion(double lambda_max, std::vector<double> coefficients)
    : lambda_max_(lambda_max), coeffs_(std::move(coefficients)) {
  if (!(lambda_max_ > 0.0) || !std::isfinite(lambda_max_)) {
    throw InvalidArgument("Chebyshev interval bound lambda_max must be positive and finite");
  }
  if (coeffs_.empty()) throw InvalidArgument("Chebyshev expansion needs at least c_0");
}

std::size_t default_quadrature_nodes(std::size_t degree) {
  return std::max<std::size_t>(2 * (degree + 1), 64);
}

ChebyshevExpansion compute_coefficients(const ScalarFunction& func, std::size_t degree,
                                        double lambda_max, std::size_t n_quad) {
  if (n_quad == 0) n_quad = default_quadrature_nodes(degree);
  if (n_quad < degree + 1) throw InvalidArgument("need at least M + 1 quadrature nodes");
  if (!(lambda_max > 0.0) || !std::isfinite(lambda_max)) {
    throw InvalidArgument("lambda_max must be positive and finite");
  }
  const double a = 0.5 * lambda_max;
  const double nq = static_cast<double>(n_quad);
  std::vector<double> theta(n_quad);
  std::vector<double> values(n_quad);
  for (std::size_t p = 0; p < n_quad; ++p) {
    theta[p] = std::numbers::pi * (static_cast<double>(p) + 0.5) / nq;
    values[p] = func(a * (std::cos(theta[p]) + 1.0));
    if (!std::isfinite(values[p])) {
      throw DataError("function is not finite at x = " +
                      std::to_string(a * (std::cos(theta[p]) + 1.0)));
    }
  }
  std::vector<double> c(degree + 1, 0.0);
  for (std::size_t k = 0; k <= degree; ++k) {
    double sum = 0.0;
    for (std::size_t p = 0; p < n_quad; ++p) {
      sum += std::cos(static_cast<double>(k) * theta[p]) * values[p];
    }
    c[k] = 2.0 * sum / nq;
  }
  return ChebyshevExpansion(lambda_max, std::move(c));
}

double eval_scalar(const ChebyshevExpansion& p, double x) {
  // Clenshaw summation of sum_k c'_k T_k(y), c'_0 = c_0 / 2.
  const auto c = p.coefficients();
  const double a = p.half_width();
  const double y = (x - a) / a;
  double b1 = 0.0;
  double b2 = 0.0;
  for (std::size_t k = c.size(); k-- > 1;) {
    const double b0 = 2.0 * y * b1 - b2 + c[k];
    b2 = b1;
    b1 = b0;
  }
  return y * b1 - b2 + 0.5 * c[0];
}

std::vector<std::vector<double>> apply_bands(std::span<const ChebyshevExpansion> bands,
                                             const LaplacianOperator& L,
                                             std::span<const double> f) {
  const std::size_t n = L.size();
  if (f.size() != n) {
    throw InvalidArgument("signal length " + std::to_string(f.size()) +
                          " does not match N = " + std::to_string(n));
  }
  if (bands.empty()) return {};
  std::size_t max_degree = 0;
  for (const auto& b : bands) {
    if (b.lambda_max() != bands.front().lambda_max()) {
      throw InvalidArgument("expansions sharing a sweep must use the same interval");
    }
    max_degree = std::max(max_degree, b.degree());
  }
  const double a = bands.front().half_width();
  const CsrView csr = L.csr();

  std::vector<std::vector<double>> out(bands.size(), std::vector<double>(n));
  for (std::size_t j = 0; j < bands.size(); ++j) {
    par::scale_into(0.5 * bands[j].coefficients()[0], f, out[j]);
  }
  if (max_degree == 0) return out;

  // Three rotating work vectors: T_{k-2}, T_{k-1}, T_k.
  std::vector<double> prev(f.begin(), f.end());
  std::vector<double> cur(n);
  std::vector<double> next(n);
  par::chebyshev_first(csr, a, prev, cur);
  L.record_matvecs(1);
  for (std::size_t j = 0; j < bands.size(); ++j) {
    if (bands[j].degree() >= 1) par::axpy(bands[j].coefficients()[1], cur, out[j]);
  }
  for (std::size_t k = 2; k <= max_degree; ++k) {
    par::chebyshev_step(csr, a, cur, prev, next);
    L.record_matvecs(1);
    for (std::size_t j = 0; j < bands.size(); ++j) {
      if (bands[j].degree() >= k) par::axpy(bands[j].coefficients()[k], next, out[j]);
    }
    std::swap(prev, cur);
    std::swap(cur, next);
  }
  return out;
}

std::vector<double> apply_to_vector(const ChebyshevExpansion& p, const LaplacianOperator& L,
                                    std::span<const double> f) {
  auto out = apply_bands(std::span<const ChebyshevExpansion>(&p, 1), L, f);
  return std::move(out.front());
}

double sup_error(const ChebyshevExpansion& p, const ScalarFunction& func, std::size_t n_grid) {
  if (n_grid < 2) throw InvalidArgument("sup_error grid needs at least two points");
  double worst = 0.0;
  for (std::size_t i = 0; i < n_grid; ++i) {
    const double x = p.lambda_max() * static_cast<double>(i) / static_cast<double>(n_grid - 1);
    worst = std::max(worst, std::abs(func(x) - eval_scalar(p, x)));
  }
  return worst;
}

ChebyshevExpansion square_and_sum(std::span<const ChebyshevExpansion> expansions) {
  if (expansions.empty()) throw InvalidArgument("square_and_sum needs at least one expansion");
  std::size_t max_degree = 0;
  for (const auto& e : expansions) {
    if (e.lambda_max() != expansions.front().lambda_max()) {
      throw InvalidArgument("square_and_sum: expansions use different intervals");
    }
    max_degree = std::max(max_degree, e.degree());
  }
  std::vector<double> d(2 * max_degree + 1, 0.0);
  for (const auto& e : expansions) {
    const std::size_t M = e.degree();
    // c' carries the halved constant term so that p = sum_k c'_k Tbar_k.
    std::vector<double> c(e.coefficients().begin(), e.coefficients().end());
    c[0] *= 0.5;

    double dk = c[0] * c[0];
    for (std::size_t i = 0; i <= M; ++i) dk += c[i] * c[i];
    d[0] += 2.0 * (0.5 * dk);  // d_0 = 2 d'_0

    for (std::size_t k = 1; k <= M; ++k) {
      double sum = 0.0;
      for (std::size_t i = 0; i <= k; ++i) sum += c[i] * c[k - i];
      for (std::size_t i = 0; i + k <= M; ++i) sum += c[i] * c[k + i];
      for (std::size_t i = k; i <= M; ++i) sum += c[i] * c[i - k];
      d[k] += 0.5 * sum;
    }
    for (std::size_t k = M + 1; k <= 2 * M; ++k) {
      double sum = 0.0;
      for (std::size_t i = k - M; i <= M; ++i) sum += c[i] * c[k - i];
      d[k] += 0.5 * sum;
    }
  }
  return ChebyshevExpansion(expansions.front().lambda_max(), std::move(d));
}

}  // namespace sgwt
