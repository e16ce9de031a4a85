#include "sgwt/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sgwt/error.hpp"
#include "sgwt/random.hpp"

namespace sgwt {

namespace {

// Row-major n x n accessor.
struct Square {
  std::vector<double>& a;
  std::size_t n;
  double& operator()(std::size_t r, std::size_t c) { return a[r * n + c]; }
};

// Householder reduction to tridiagonal form. On exit V holds the orthogonal
// transformation, d the diagonal and e the subdiagonal (e[0] = 0).
void tridiagonalize(Square V, std::vector<double>& d, std::vector<double>& e) {
  const std::size_t n = V.n;
  for (std::size_t j = 0; j < n; ++j) d[j] = V(n - 1, j);

  for (std::size_t i = n - 1; i > 0; --i) {
    double scale = 0.0;
    double h = 0.0;
    for (std::size_t k = 0; k < i; ++k) scale += std::abs(d[k]);
    if (scale == 0.0) {
      e[i] = d[i - 1];
      for (std::size_t j = 0; j < i; ++j) {
        d[j] = V(i - 1, j);
        V(i, j) = 0.0;
        V(j, i) = 0.0;
      }
    } else {
      for (std::size_t k = 0; k < i; ++k) {
        d[k] /= scale;
        h += d[k] * d[k];
      }
      double f = d[i - 1];
      double g = std::sqrt(h);
      if (f > 0) g = -g;
      e[i] = scale * g;
      h -= f * g;
      d[i - 1] = f - g;
      for (std::size_t j = 0; j < i; ++j) e[j] = 0.0;

      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        V(j, i) = f;
        g = e[j] + V(j, j) * f;
        for (std::size_t k = j + 1; k <= i - 1; ++k) {
          g += V(k, j) * d[k];
          e[k] += V(k, j) * f;
        }
        e[j] = g;
      }
      f = 0.0;
      for (std::size_t j = 0; j < i; ++j) {
        e[j] /= h;
        f += e[j] * d[j];
      }
      const double hh = f / (h + h);
      for (std::size_t j = 0; j < i; ++j) e[j] -= hh * d[j];
      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        g = e[j];
        for (std::size_t k = j; k <= i - 1; ++k) V(k, j) -= (f * e[k] + g * d[k]);
        d[j] = V(i - 1, j);
        V(i, j) = 0.0;
      }
    }
    d[i] = h;
  }

  // Accumulate the transformations.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    V(n - 1, i) = V(i, i);
    V(i, i) = 1.0;
    const double h = d[i + 1];
    if (h != 0.0) {
      for (std::size_t k = 0; k <= i; ++k) d[k] = V(k, i + 1) / h;
      for (std::size_t j = 0; j <= i; ++j) {
        double g = 0.0;
        for (std::size_t k = 0; k <= i; ++k) g += V(k, i + 1) * V(k, j);
        for (std::size_t k = 0; k <= i; ++k) V(k, j) -= g * d[k];
      }
    }
    for (std::size_t k = 0; k <= i; ++k) V(k, i + 1) = 0.0;
  }
  for (std::size_t j = 0; j < n; ++j) {
    d[j] = V(n - 1, j);
    V(n - 1, j) = 0.0;
  }
  V(n - 1, n - 1) = 1.0;
  e[0] = 0.0;
}

// Implicit-shift QL on the tridiagonal (d, e), rotating the columns of V.
void tridiagonal_ql(Square V, std::vector<double>& d, std::vector<double>& e) {
  const std::size_t n = V.n;
  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  double f = 0.0;
  double tst1 = 0.0;
  const double eps = std::ldexp(1.0, -52);
  const std::size_t max_sweeps = 60 * n + 60;
  for (std::size_t l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    std::size_t m = l;
    while (m < n) {
      if (std::abs(e[m]) <= eps * tst1) break;
      ++m;
    }
    if (m > l) {
      std::size_t iter = 0;
      do {
        if (++iter > max_sweeps) throw NumericalError("tridiagonal QL did not converge");
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
        f += h;

        p = d[m];
        double c = 1.0;
        double c2 = c;
        double c3 = c;
        const double el1 = e[l + 1];
        double s = 0.0;
        double s2 = 0.0;
        for (std::size_t i = m; i-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[i];
          h = c * p;
          r = std::hypot(p, e[i]);
          e[i + 1] = s * r;
          s = e[i] / r;
          c = p / r;
          p = c * d[i] - s * g;
          d[i + 1] = h + s * (c * g + s * d[i]);
          for (std::size_t k = 0; k < n; ++k) {
            h = V(k, i + 1);
            V(k, i + 1) = s * V(k, i) + c * h;
            V(k, i) = c * V(k, i) - s * h;
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }
}

void check_length(std::size_t got, std::size_t want) {
  if (got != want) {
    throw InvalidArgument("vector length " + std::to_string(got) + " does not match N = " +
                          std::to_string(want));
  }
}

}  // namespace

EigenDecomposition symmetric_eigendecomposition(std::span<const double> dense, std::size_t n) {
  if (n == 0 || dense.size() != n * n) throw InvalidArgument("expected a non-empty n x n matrix");
  std::vector<double> v(dense.begin(), dense.end());
  std::vector<double> d(n, 0.0);
  std::vector<double> e(n, 0.0);
  Square V{v, n};
  tridiagonalize(V, d, e);
  tridiagonal_ql(V, d, e);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

  EigenDecomposition eig;
  eig.n = n;
  eig.eigenvalues.resize(n);
  eig.eigenvectors.resize(n * n);
  for (std::size_t l = 0; l < n; ++l) {
    const std::size_t src = order[l];
    eig.eigenvalues[l] = d[src];
    double* row = eig.eigenvectors.data() + l * n;
    for (std::size_t k = 0; k < n; ++k) row[k] = V(k, src);
    const auto first = std::find_if(row, row + n, [](double x) { return std::abs(x) > 1e-12; });
    if (first != row + n && *first < 0) {
      for (std::size_t k = 0; k < n; ++k) row[k] = -row[k];
    }
  }
  return eig;
}

EigenDecomposition full_eigendecomposition(const LaplacianOperator& L, std::size_t max_vertices) {
  if (L.size() > max_vertices) {
    throw NumericalError("graph has " + std::to_string(L.size()) +
                         " vertices; the dense oracle is limited to " +
                         std::to_string(max_vertices));
  }
  return symmetric_eigendecomposition(L.to_dense(), L.size());
}

std::vector<double> graph_fourier(const EigenDecomposition& eig, std::span<const double> f) {
  check_length(f.size(), eig.n);
  std::vector<double> fhat(eig.n);
  for (std::size_t l = 0; l < eig.n; ++l) {
    const auto chi = eig.eigenvector(l);
    fhat[l] = std::inner_product(chi.begin(), chi.end(), f.begin(), 0.0);
  }
  return fhat;
}

std::vector<double> inverse_graph_fourier(const EigenDecomposition& eig,
                                          std::span<const double> fhat) {
  check_length(fhat.size(), eig.n);
  std::vector<double> f(eig.n, 0.0);
  for (std::size_t l = 0; l < eig.n; ++l) {
    const auto chi = eig.eigenvector(l);
    for (std::size_t m = 0; m < eig.n; ++m) f[m] += fhat[l] * chi[m];
  }
  return f;
}

std::vector<double> spectral_filter(const EigenDecomposition& eig,
                                    const std::function<double(double)>& kernel,
                                    std::span<const double> f) {
  auto fhat = graph_fourier(eig, f);
  for (std::size_t l = 0; l < eig.n; ++l) fhat[l] *= kernel(std::max(eig.eigenvalues[l], 0.0));
  return inverse_graph_fourier(eig, fhat);
}

std::vector<double> exact_wavelet(const EigenDecomposition& eig,
                                  const std::function<double(double)>& kernel, double t,
                                  std::size_t n) {
  if (!(t > 0.0) || !std::isfinite(t)) throw InvalidArgument("wavelet scale must be positive");
  if (n >= eig.n) throw InvalidArgument("wavelet center vertex out of range");
  std::vector<double> psi(eig.n, 0.0);
  for (std::size_t l = 0; l < eig.n; ++l) {
    const auto chi = eig.eigenvector(l);
    const double weight = kernel(t * std::max(eig.eigenvalues[l], 0.0)) * chi[n];
    for (std::size_t m = 0; m < eig.n; ++m) psi[m] += weight * chi[m];
  }
  return psi;
}

std::vector<double> exact_wavelet(const EigenDecomposition& eig, const TransformDesign& design,
                                  double t, std::size_t n) {
  return exact_wavelet(eig, [&](double x) { return design.kernel(x); }, t, n);
}

CoefficientSet exact_transform(const EigenDecomposition& eig, const TransformDesign& design,
                               std::span<const double> f) {
  const auto fhat = graph_fourier(eig, f);
  CoefficientSet out(eig.n, design.J);
  std::vector<double> weighted(eig.n);
  for (std::size_t b = 0; b < design.num_bands(); ++b) {
    for (std::size_t l = 0; l < eig.n; ++l) {
      weighted[l] = design.band_kernel(b, std::max(eig.eigenvalues[l], 0.0)) * fhat[l];
    }
    const auto band = inverse_graph_fourier(eig, weighted);
    std::copy(band.begin(), band.end(), out.band(b).begin());
  }
  return out;
}

SpectrumBound estimate_lambda_max(const LaplacianOperator& L, const PowerIterationOptions& opts) {
  if (!L.has_edges()) throw InvalidArgument("spectrum bound needs a graph with at least one edge");
  const std::size_t n = L.size();
  Rng rng(opts.seed);
  std::vector<double> x(n);
  for (double& v : x) v = rng.normal();
  par::scale_into(1.0 / std::sqrt(par::dot(x, x)), x, x);

  std::vector<double> y(n);
  std::vector<double> step(n);
  SpectrumBound out;
  for (std::size_t it = 1; it <= opts.max_iter; ++it) {
    L.apply(x, y);
    const double rayleigh = par::dot(x, y);
    const double norm = std::sqrt(par::dot(y, y));
    out.estimate = std::max(out.estimate, rayleigh);
    out.iterations = it;
    if (norm == 0.0) break;
    // Stop on the change of the unit iterate, not of the Rayleigh quotient:
    // the quotient can stall near a lower eigenvalue when the start vector
    // is nearly orthogonal to the top eigenvector.
    par::scale_into(1.0 / norm, y, y);
    std::copy(y.begin(), y.end(), step.begin());
    par::axpy(-1.0, x, step);
    const double change = std::sqrt(par::dot(step, step));
    x.swap(y);
    if (change <= opts.tol) {
      out.converged = true;
      break;
    }
  }
  out.lambda_max = opts.safety_factor * out.estimate;
  return out;
}

}  // namespace sgwt
