// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances are fixed here and not tuned per run.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "sgwt/sgwt.hpp"
#include "support/test_graphs.hpp"

using namespace sgwt;
using namespace sgwt::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

std::shared_ptr<const LaplacianOperator> share(LaplacianOperator L) {
  return std::make_shared<const LaplacianOperator>(std::move(L));
}

double coeff_dot(const CoefficientSet& a, const CoefficientSet& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a.values()[i] * b.values()[i];
  return s;
}

// 1. Fast forward (degree 60) against the eigenbasis transform.
Outcome oracle_equivalence() {
  const auto start = Clock::now();
  Rng rng(1001);
  double worst_bound = 0.0;  // max deviation / (B_j |f|); must be <= 1
  double worst_abs = 0.0;    // max deviation / |f|; must be <= 1e-6
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 5 + rng.index(56);
    const auto L = share(laplacian(random_graph(rng, n, rng.uniform(0.05, 0.3)), LaplacianKind::unnormalized));
    const auto design = TransformDesign::make(estimate_lambda_max(*L).lambda_max);
    const auto pt = prepare(design, L, {60});
    const auto eig = full_eigendecomposition(*L);
    const auto err = pt.band_sup_errors();
    const auto f = random_signal(rng, n);
    const double nf = norm2(f);
    const auto fast = forward(pt, f);
    const auto exact = exact_transform(eig, design, f);
    for (std::size_t j = 0; j < fast.num_bands(); ++j) {
      double dev = 0.0;
      for (std::size_t v = 0; v < n; ++v) dev = std::max(dev, std::abs(fast.band(j)[v] - exact.band(j)[v]));
      worst_bound = std::max(worst_bound, dev / (err[j] * nf));
      worst_abs = std::max(worst_abs, dev / nf);
    }
  }
  const double elapsed = seconds_since(start);
  const bool bound_ok = worst_bound <= 1.0 + 1e-9;
  const bool abs_ok = worst_abs <= 1e-6;
  return {bound_ok && abs_ok && elapsed < 30.0,
          fmt("worst dev/(B_j|f|) = %.3g (<= 1: %s), worst dev/|f| = %.3g (<= 1e-6: %s), %.2f s", worst_bound,
              bound_ok ? "yes" : "no", worst_abs, abs_ok ? "yes" : "no", elapsed)};
}

// 2. (L^s)[m][n] == 0 whenever hop distance > s.
Outcome power_locality() {
  Rng rng(1002);
  std::size_t checked = 0;
  std::size_t violations = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng.index(39);
    const auto g = random_graph(rng, n, 2.5 / static_cast<double>(n), trial % 4 != 0);
    const auto degrees = g.degrees();
    const bool isolated = std::any_of(degrees.begin(), degrees.end(), [](double d) { return d == 0.0; });
    std::vector<std::vector<std::size_t>> hops;
    for (std::size_t m = 0; m < n; ++m) hops.push_back(hop_distance(g, m));
    for (auto kind : {LaplacianKind::unnormalized, LaplacianKind::normalized}) {
      if (kind == LaplacianKind::normalized && isolated) continue;
      const auto L = laplacian(g, kind).to_dense();
      std::vector<double> power = L;
      for (int s = 1; s <= 3; ++s) {
        if (s > 1) {
          std::vector<double> next(n * n, 0.0);
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
              for (std::size_t j = 0; j < n; ++j) next[i * n + j] += power[i * n + k] * L[k * n + j];
          power = std::move(next);
        }
        for (std::size_t m = 0; m < n; ++m) {
          for (std::size_t k = 0; k < n; ++k) {
            if (hops[m][k] != kUnreachable && hops[m][k] <= static_cast<std::size_t>(s)) continue;
            ++checked;
            if (power[m * n + k] != 0.0) ++violations;
          }
        }
      }
    }
  }
  return {violations == 0, fmt("%zu far entries checked, %zu nonzero", checked, violations)};
}

// 3. A |f|^2 <= |W~ f|^2 <= B |f|^2 with A, B from P over the true spectrum.
Outcome frame_inequality() {
  Rng rng(1003);
  double worst_low = INFINITY;   // min energy / (A |f|^2)
  double worst_high = 0.0;       // max energy / (B |f|^2)
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 3 + rng.index(28);
    const auto L = share(laplacian(random_graph(rng, n, rng.uniform(0.1, 0.4)), LaplacianKind::unnormalized));
    const auto pt = prepare(TransformDesign::make(estimate_lambda_max(*L).lambda_max), L);
    const auto eig = full_eigendecomposition(*L);
    double A = INFINITY, B = 0.0;
    for (double lam : eig.eigenvalues) {
      double P = 0.0;
      for (const auto& p : pt.bands()) P += std::pow(eval_scalar(p, std::max(lam, 0.0)), 2);
      A = std::min(A, P);
      B = std::max(B, P);
    }
    for (int k = 0; k < 100; ++k) {
      const auto f = random_signal(rng, n);
      const auto c = forward(pt, f);
      const double energy = coeff_dot(c, c);
      const double ff = dot(f, f);
      worst_low = std::min(worst_low, energy / (A * ff));
      worst_high = std::max(worst_high, energy / (B * ff));
    }
  }
  const bool ok = worst_low >= 1.0 - 1e-9 && worst_high <= 1.0 + 1e-9;
  return {ok, fmt("min energy/(A|f|^2) = %.12f, max energy/(B|f|^2) = %.12f", worst_low, worst_high)};
}

// 4. Pseudoinverse round trip on a 16x16 grid mask.
Outcome reconstruction() {
  const auto start = Clock::now();
  Rng rng(1004);
  const auto L = share(laplacian(build_from_grid_mask(GridMask::full(16, 16)), LaplacianKind::unnormalized));
  const auto pt = prepare(TransformDesign::make(estimate_lambda_max(*L).lambda_max, 4, 20.0), L, {50});
  const auto f = random_signal(rng, L->size());
  const auto rec = pseudoinverse(pt, forward(pt, f), CgOptions{1e-8, 500});
  std::vector<double> diff(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) diff[i] = rec.signal[i] - f[i];
  const double rel = norm2(diff) / norm2(f);
  const double elapsed = seconds_since(start);
  return {rel <= 1e-6 && rec.iterations <= 200 && elapsed < 5.0,
          fmt("relative error %.3g, %zu CG iterations, %.2f s", rel, rec.iterations, elapsed)};
}

// 5. Continuous-scale inverse on P10.
Outcome continuous_inverse() {
  Rng rng(1005);
  const auto eig = full_eigendecomposition(laplacian(path_graph(10), LaplacianKind::unnormalized));
  const auto f = random_signal(rng, 10);
  std::vector<double> errors;
  for (std::size_t count : {100, 200, 400}) {
    errors.push_back(continuous_inverse_check(eig, KernelSpec{}, f, count).relative_error);
  }
  const bool monotone = errors[1] < errors[0] && errors[2] < errors[1];
  return {errors[2] <= 1e-2 && monotone,
          fmt("relative error %.3g / %.3g / %.3g at 100 / 200 / 400 scales", errors[0], errors[1], errors[2])};
}

// 6. Wavelet decay at hop distance 3 on P20 for kernels vanishing to order 2.
Outcome localization() {
  const auto L = laplacian(path_graph(20), LaplacianKind::unnormalized);
  const auto eig = full_eigendecomposition(L);
  const double lmax = estimate_lambda_max(L).lambda_max;
  const std::size_t n = 0;
  const std::size_t m = 3;
  auto normalized = [&](const std::function<double(double)>& g, double t) {
    const auto psi = exact_wavelet(eig, g, t, n);
    return std::abs(psi[m]) / norm2(psi);
  };
  const double base[] = {1e-2, 5e-3, 2.5e-3};

  // Smooth kernel with g(x) ~ x^2 at 0: the decay is linear in t.
  const std::function<double(double)> smooth = [](double x) { return x * x * std::exp(-x); };
  double worst_ratio = 0.0;
  for (double b : base) {
    const double t = b * 2.0 / lmax;
    worst_ratio = std::max(worst_ratio, normalized(smooth, t / 2.0) / normalized(smooth, t));
  }
  // Default kernel: every tested t has t lambda_max < x1, so g(tL) = t^2 L^2
  // and the value at distance 3 is zero up to round-off.
  const KernelSpec g;
  double floor = 0.0;
  for (double b : base) {
    const double t = b * 2.0 / lmax;
    floor = std::max({floor, normalized(g, t), normalized(g, t / 2.0)});
  }
  return {worst_ratio <= 0.75 && floor <= 1e-10,
          fmt("x^2 e^-x kernel: worst ratio psi(t/2)/psi(t) = %.4f; default kernel: max |psi(m)|/|psi| = %.2g",
              worst_ratio, floor)};
}

// 7. Sup error of the degree-20 expansion of g on [0, 10].
Outcome chebyshev_anchor() {
  const KernelSpec g;
  const double e = sup_error(compute_coefficients(g, 20, 10.0), g);
  return {e >= 0.05 && e <= 0.6, fmt("sup error %.4f, target [0.05, 0.6]", e)};
}

// 8. Partition function on [0, 10] with K = 20, J = 5.
Outcome partition_anchor() {
  const auto fb = frame_bounds_grid(TransformDesign::make(10.0, 5, 20.0));
  return {fb.A > 0.0 && fb.B / fb.A < 100.0, fmt("A = %.6f, B = %.6f, B/A = %.4f", fb.A, fb.B, fb.B / fb.A)};
}

// 9. Forward wall time on grids of side 64, 128, 256 at degree 50.
Outcome performance() {
  Rng rng(1009);
  std::vector<double> times;
  for (std::size_t side : {64, 128, 256}) {
    const auto L = share(laplacian(build_from_grid_mask(GridMask::full(side, side)), LaplacianKind::unnormalized));
    const auto pt = prepare(TransformDesign::make(estimate_lambda_max(*L).lambda_max), L, {50});
    const auto f = random_signal(rng, L->size());
    forward(pt, f);  // warm-up, untimed
    std::vector<double> runs;
    for (int r = 0; r < 9; ++r) {
      const auto start = Clock::now();
      const auto c = forward(pt, f);
      runs.push_back(seconds_since(start));
      if (c.size() == 0) return {false, "empty output"};
    }
    std::sort(runs.begin(), runs.end());
    times.push_back(runs[runs.size() / 2]);
  }
  const double r1 = times[1] / times[0];
  const double r2 = times[2] / times[1];
  return {r1 <= 5.0 && r2 <= 5.0,
          fmt("median %.4f / %.4f / %.4f s, growth %.2fx and %.2fx per 4x vertices", times[0], times[1], times[2], r1,
              r2)};
}

// 10. Adjoint identity on a 200-vertex graph.
Outcome adjoint_identity() {
  Rng rng(1010);
  const auto L = share(laplacian(random_graph(rng, 200, 0.03), LaplacianKind::unnormalized));
  const auto pt = prepare(TransformDesign::make(estimate_lambda_max(*L).lambda_max), L);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const auto f = random_signal(rng, 200);
    std::vector<double> data(200 * pt.num_bands());
    for (double& x : data) x = rng.normal();
    const CoefficientSet eta(200, pt.design().J, std::move(data));
    const double lhs = coeff_dot(eta, forward(pt, f));
    const double rhs = dot(adjoint(pt, eta), f);
    worst = std::max(worst, std::abs(lhs - rhs) / (std::sqrt(coeff_dot(eta, eta)) * norm2(f)));
  }
  return {worst <= 1e-10, fmt("worst |<eta,Wf> - <W*eta,f>|/(|eta||f|) = %.3g", worst)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "oracle equivalence", oracle_equivalence},
      {2, "Laplacian-power locality", power_locality},
      {3, "frame inequality", frame_inequality},
      {4, "reconstruction round trip", reconstruction},
      {5, "continuous inverse", continuous_inverse},
      {6, "localization decay", localization},
      {7, "Chebyshev error anchor", chebyshev_anchor},
      {8, "partition function anchor", partition_anchor},
      {9, "performance linearity", performance},
      {10, "adjoint correctness", adjoint_identity},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s  %2d  %-27s %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
