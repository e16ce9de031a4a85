#include <cmath>
#include <memory>
#include <vector>

#include "doctest.h"
#include "sgwt/error.hpp"
#include "sgwt/transform.hpp"
#include "support/dense_oracle.hpp"
#include "support/test_graphs.hpp"

using namespace sgwt;
using namespace sgwt::testing;

namespace {

struct Setup {
  std::shared_ptr<const LaplacianOperator> L;
  PreparedTransform pt;
};

Setup make_setup(const WeightedGraph& g, std::vector<std::size_t> degrees = {kDefaultDegree},
                 LaplacianKind kind = LaplacianKind::unnormalized) {
  auto L = std::make_shared<const LaplacianOperator>(laplacian(g, kind));
  const auto design = TransformDesign::make(estimate_lambda_max(*L).lambda_max);
  return {L, prepare(design, L, std::move(degrees))};
}

double coeff_dot(const CoefficientSet& a, const CoefficientSet& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a.values()[i] * b.values()[i];
  return s;
}

double coeff_norm(const CoefficientSet& c) { return std::sqrt(coeff_dot(c, c)); }

CoefficientSet random_coefficients(Rng& rng, std::size_t n, std::size_t J) {
  CoefficientSet c(n, J);
  std::vector<double> data(c.size());
  for (double& x : data) x = rng.normal();
  return CoefficientSet(n, J, std::move(data));
}

}  // namespace

TEST_SUITE("transform") {
  TEST_CASE("prepare: structure and determinism") {
    const auto g = grid_graph(8);
    auto a = make_setup(g);
    CHECK(a.pt.num_bands() == 5);
    CHECK(a.pt.degrees() == std::vector<std::size_t>(5, 50));
    CHECK(a.pt.frame_polynomial().degree() == 100);
    const auto b = prepare(a.pt.design(), a.L, {50});
    for (std::size_t j = 0; j < 5; ++j) {
      const auto ca = a.pt.bands()[j].coefficients();
      const auto cb = b.bands()[j].coefficients();
      CHECK(std::equal(ca.begin(), ca.end(), cb.begin(), cb.end()));
    }
    const auto per_band = prepare(a.pt.design(), a.L, {10, 20, 30, 40, 25});
    CHECK(per_band.frame_polynomial().degree() == 80);
    CHECK_THROWS_AS(prepare(a.pt.design(), a.L, {10, 20}), InvalidArgument);
  }

  TEST_CASE("forward: zero in, zero out") {
    auto s = make_setup(grid_graph(5));
    const auto c = forward(s.pt, std::vector<double>(25, 0.0));
    for (double x : c.values()) CHECK(x == 0.0);
    CHECK(c.num_bands() == 5);
    CHECK(c.size() == 125);
    CHECK_THROWS_AS(forward(s.pt, std::vector<double>(24, 0.0)), InvalidArgument);
  }

  TEST_CASE("forward: P2 delta") {
    auto s = make_setup(path_graph(2), {20});
    const auto c = forward(s.pt, std::vector<double>{1.0, 0.0});
    const auto err = s.pt.band_sup_errors();
    const auto& d = s.pt.design();
    for (std::size_t j = 1; j <= d.J; ++j) {
      const double half = d.kernel(2.0 * d.scales[j - 1]) / 2.0;
      CHECK(std::abs(c.band(j)[0] - half) <= err[j] + 1e-12);
      CHECK(std::abs(c.band(j)[1] + half) <= err[j] + 1e-12);
    }
  }

  TEST_CASE("property: forward obeys the approximation bound") {
    Rng rng(61);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 3 + rng.index(48);
      auto s = make_setup(random_graph(rng, n, 0.12), {10 + rng.index(50)});
      const auto eig = full_eigendecomposition(*s.L);
      const auto f = random_signal(rng, n);
      const auto fast = forward(s.pt, f);
      const auto exact = exact_transform(eig, s.pt.design(), f);
      const auto err = s.pt.band_sup_errors();
      for (std::size_t j = 0; j < fast.num_bands(); ++j) {
        double worst = 0.0;
        for (std::size_t v = 0; v < n; ++v) worst = std::max(worst, std::abs(fast.band(j)[v] - exact.band(j)[v]));
        CHECK(worst <= err[j] * norm2(f) * (1.0 + 1e-9) + 1e-12);
      }
    }
  }

  TEST_CASE("property: zero-DC wavelet bands") {
    auto s = make_setup(grid_graph(12));
    const std::vector<double> ones(144, 1.0);
    const auto c = forward(s.pt, ones);
    const auto err = s.pt.band_sup_errors();
    for (std::size_t j = 1; j < c.num_bands(); ++j) {
      const std::vector<double> band(c.band(j).begin(), c.band(j).end());
      // Every entry is within sup_error of g(0) = 0.
      CHECK(max_abs_diff(band, std::vector<double>(144, 0.0)) <= err[j] * (1.0 + 1e-9));
    }
  }

  TEST_CASE("property: adjoint identity") {
    Rng rng(62);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 2 + rng.index(200);
      auto s = make_setup(random_graph(rng, n, 4.0 / static_cast<double>(n)), {5 + rng.index(60)});
      const auto f = random_signal(rng, n);
      const auto eta = random_coefficients(rng, n, s.pt.design().J);
      const double lhs = coeff_dot(eta, forward(s.pt, f));
      const auto back = adjoint(s.pt, eta);
      const double rhs = dot(back, f);
      CHECK(std::abs(lhs - rhs) <= 1e-10 * coeff_norm(eta) * norm2(f) * 10);
    }
  }

  TEST_CASE("adjoint of a single band") {
    Rng rng(63);
    auto s = make_setup(grid_graph(6));
    CoefficientSet c(36, s.pt.design().J);
    std::vector<double> data(c.size(), 0.0);
    const auto eta = random_signal(rng, 36);
    std::copy(eta.begin(), eta.end(), data.begin());
    const auto out = adjoint(s.pt, CoefficientSet(36, s.pt.design().J, data));
    CHECK(max_abs_diff(out, apply_to_vector(s.pt.bands()[0], *s.L, eta)) <= 1e-13);
    CHECK_THROWS_AS(adjoint(s.pt, CoefficientSet(35, s.pt.design().J)), InvalidArgument);
  }

  TEST_CASE("frame operator on P2 equals the composition") {
    auto s = make_setup(path_graph(2), {30});
    const std::vector<double> f{0.8, -0.1};
    const auto composed = adjoint(s.pt, forward(s.pt, f));
    const auto direct = frame_operator(s.pt, f);
    REQUIRE(direct.size() == 2);
    CHECK(max_abs_diff(direct, composed) <= 1e-10);
    CHECK(frame_operator(s.pt, std::vector<double>(2, 0.0)) == std::vector<double>(2, 0.0));
  }

  TEST_CASE("frame operator on a grid: accuracy and cost") {
    Rng rng(64);
    auto s = make_setup(grid_graph(10));
    const auto f = random_signal(rng, 100);
    s.L->reset_matvec_count();
    const auto composed = adjoint(s.pt, forward(s.pt, f));
    const auto sequential = s.L->matvec_count();
    s.L->reset_matvec_count();
    const auto direct = frame_operator(s.pt, f);
    const auto single = s.L->matvec_count();
    CHECK(norm2([&] {
            std::vector<double> d(100);
            for (std::size_t i = 0; i < 100; ++i) d[i] = direct[i] - composed[i];
            return d;
          }()) <= 1e-9 * norm2(f));
    CHECK(single == 100);
    CHECK(sequential == 50 + 5 * 50);
  }

  TEST_CASE("property: fast frame inequality over the true spectrum") {
    Rng rng(65);
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t n = 3 + rng.index(28);
      auto s = make_setup(random_graph(rng, n, 0.2), {25});
      const auto eig = full_eigendecomposition(*s.L);
      double A = INFINITY, B = 0.0;
      for (double lam : eig.eigenvalues) {
        const double P = eval_scalar(s.pt.frame_polynomial(), std::max(lam, 0.0));
        A = std::min(A, P);
        B = std::max(B, P);
      }
      for (int k = 0; k < 20; ++k) {
        const auto f = random_signal(rng, n);
        const double energy = std::pow(coeff_norm(forward(s.pt, f)), 2);
        const double ff = dot(f, f);
        CHECK(energy >= A * ff * (1.0 - 1e-9));
        CHECK(energy <= B * ff * (1.0 + 1e-9));
      }
    }
  }

  TEST_CASE("pseudoinverse round trip on a 16x16 grid") {
    Rng rng(66);
    auto s = make_setup(grid_graph(16));
    const auto f = random_signal(rng, 256);
    const auto rec = pseudoinverse(s.pt, forward(s.pt, f));
    CHECK(rec.converged);
    CHECK(rec.relative_residual <= 1e-8);
    std::vector<double> d(256);
    for (std::size_t i = 0; i < 256; ++i) d[i] = rec.signal[i] - f[i];
    CHECK(norm2(d) <= 1e-6 * norm2(f));
    CHECK(rec.warnings.empty());
  }

  TEST_CASE("pseudoinverse of zero") {
    auto s = make_setup(grid_graph(4));
    const auto rec = pseudoinverse(s.pt, CoefficientSet(16, s.pt.design().J));
    CHECK(rec.iterations == 0);
    CHECK(rec.converged);
    CHECK(rec.signal == std::vector<double>(16, 0.0));
  }

  TEST_CASE("pseudoinverse is least squares for perturbed coefficients") {
    Rng rng(67);
    auto s = make_setup(grid_graph(9));
    const auto f = random_signal(rng, 81);
    auto c = forward(s.pt, f);
    std::vector<double> noisy(c.values().begin(), c.values().end());
    for (double& x : noisy) x += 0.05 * rng.normal();
    const CoefficientSet cn(81, s.pt.design().J, noisy);
    const auto rec = pseudoinverse(s.pt, cn);
    REQUIRE(rec.converged);
    auto residual = [&](const std::vector<double>& x) {
      const auto wx = forward(s.pt, x);
      double r = 0.0;
      for (std::size_t i = 0; i < wx.size(); ++i) r += std::pow(cn.values()[i] - wx.values()[i], 2);
      return std::sqrt(r);
    };
    CHECK(residual(rec.signal) <= residual(f));
    // Normal equations: W~*(c - W~ f_rec) ~ 0.
    const auto wf = forward(s.pt, rec.signal);
    std::vector<double> r(cn.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = cn.values()[i] - wf.values()[i];
    const auto normal = adjoint(s.pt, CoefficientSet(81, s.pt.design().J, r));
    CHECK(norm2(normal) <= 1e-6 * norm2(adjoint(s.pt, cn)));
  }

  TEST_CASE("pseudoinverse on a disconnected graph warns") {
    const std::vector<EdgeRecord> rec{{0, 1, 1.0}, {2, 3, 1.0}, {3, 4, 2.0}};
    auto s = make_setup(build_from_edge_list(5, rec), {30});
    Rng rng(68);
    const auto f = random_signal(rng, 5);
    const auto out = pseudoinverse(s.pt, forward(s.pt, f));
    CHECK_FALSE(out.warnings.empty());
    CHECK(max_abs_diff(out.signal, f) <= 1e-6 * norm2(f));
  }

  TEST_CASE("continuous inverse: constant signal reconstructs to zero") {
    const auto eig = full_eigendecomposition(laplacian(path_graph(6), LaplacianKind::unnormalized));
    const auto chi0 = eig.eigenvector(0);
    const auto out = continuous_inverse_check(eig, KernelSpec{}, chi0);
    for (double x : out.reconstruction) CHECK(std::abs(x) <= 1e-12);
    for (double x : out.target) CHECK(std::abs(x) <= 1e-12);
  }

  TEST_CASE("continuous inverse on P2") {
    Rng rng(69);
    const auto eig = full_eigendecomposition(laplacian(path_graph(2), LaplacianKind::unnormalized));
    const auto f = random_signal(rng, 2);
    const auto out = continuous_inverse_check(eig, KernelSpec{}, f, 400);
    CHECK(out.relative_error <= 1e-2);
    CHECK(out.target[0] == doctest::Approx((f[0] - f[1]) / 2.0).epsilon(1e-12));
  }

  TEST_CASE("continuous inverse converges as scales are added") {
    Rng rng(70);
    const auto eig = full_eigendecomposition(laplacian(path_graph(10), LaplacianKind::unnormalized));
    const auto f = random_signal(rng, 10);
    double prev = INFINITY;
    for (std::size_t count : {50, 100, 200, 400}) {
      const double e = continuous_inverse_check(eig, KernelSpec{}, f, count).relative_error;
      CHECK(e < prev);
      prev = e;
    }
    CHECK(prev <= 1e-3);
  }
}
