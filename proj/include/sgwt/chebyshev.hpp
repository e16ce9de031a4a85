#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "sgwt/laplacian.hpp"

namespace sgwt {

using ScalarFunction = std::function<double(double)>;

/// Truncated Chebyshev series on [0, lambda_max]:
///
///   p(x) = c_0 / 2 + sum_{k=1}^{M} c_k Tbar_k(x),   Tbar_k(x) = T_k((x - a) / a),
///
/// with a = lambda_max / 2.
class ChebyshevExpansion {
 public:
  ChebyshevExpansion(double lambda_max, std::vector<double> coefficients);

  double lambda_max() const { return lambda_max_; }
  double half_width() const { return 0.5 * lambda_max_; }
  std::size_t degree() const { return coeffs_.size() - 1; }
  std::span<const double> coefficients() const { return coeffs_; }

  /// True for x in [0, lambda_max]; outside it eval_scalar still returns
  /// the polynomial value but the approximation guarantee is void.
  bool covers(double x) const { return x >= 0.0 && x <= lambda_max_; }

 private:
  double lambda_max_;
  std::vector<double> coeffs_;
};

/// Default Gauss-Chebyshev node count for a degree-M expansion:
/// max(2(M+1), 64).
std::size_t default_quadrature_nodes(std::size_t degree);

/// c_k = (2/n) sum_p cos(k theta_p) func(a (cos theta_p + 1)),
/// theta_p = pi (p + 1/2) / n. `n_quad` = 0 selects the default.
/// Throws InvalidArgument for n_quad <= M or lambda_max <= 0, DataError if
/// func is not finite at a node.
ChebyshevExpansion compute_coefficients(const ScalarFunction& func, std::size_t degree,
                                        double lambda_max, std::size_t n_quad = 0);

double eval_scalar(const ChebyshevExpansion& p, double x);

/// p(L) f via the three-term recurrence
///   Tbar_k(L) f = (2/a)(L - a I) Tbar_{k-1}(L) f - Tbar_{k-2}(L) f,
/// using exactly degree() products with L and three work vectors.
std::vector<double> apply_to_vector(const ChebyshevExpansion& p, const LaplacianOperator& L,
                                    std::span<const double> f);

/// p_b(L) f for every expansion, sharing one recurrence sweep: each Tbar_k(L) f
/// is accumulated into all bands with degree >= k. Uses max degree products.
/// All expansions must share lambda_max.
std::vector<std::vector<double>> apply_bands(std::span<const ChebyshevExpansion> bands,
                                             const LaplacianOperator& L,
                                             std::span<const double> f);

/// max |func(x) - p(x)| over `n_grid` uniform points on [0, lambda_max].
double sup_error(const ChebyshevExpansion& p, const ScalarFunction& func,
                 std::size_t n_grid = 10000);

/// P(x) = sum_j p_j(x)^2 in the same shifted basis, degree 2 max M_j.
/// Throws InvalidArgument if the intervals differ.
ChebyshevExpansion square_and_sum(std::span<const ChebyshevExpansion> expansions);

}  // namespace sgwt
