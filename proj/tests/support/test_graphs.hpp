#pragma once

// Graph and signal generators shared by the unit and acceptance suites.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "sgwt/graph.hpp"
#include "sgwt/random.hpp"

namespace sgwt::testing {

inline WeightedGraph path_graph(std::size_t n, double w = 1.0) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, w});
  return WeightedGraph(n, std::move(edges));
}

inline WeightedGraph complete_graph(std::size_t n, double w = 1.0) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j, w});
  return WeightedGraph(n, std::move(edges));
}

inline WeightedGraph grid_graph(std::size_t side) {
  return build_from_grid_mask(GridMask::full(side, side));
}

/// Erdos-Renyi graph G(n, p) with weights uniform on [w_lo, w_hi]. When
/// `connected` is set a random spanning tree is added first.
inline WeightedGraph random_graph(Rng& rng, std::size_t n, double p, bool connected = true,
                                  double w_lo = 0.1, double w_hi = 1.0) {
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  std::vector<Edge> edges;
  auto add = [&](std::size_t u, std::size_t v) {
    if (u > v) std::swap(u, v);
    if (u == v || used[u][v]) return;
    used[u][v] = true;
    edges.push_back({u, v, rng.uniform(w_lo, w_hi)});
  };
  if (connected) {
    for (std::size_t v = 1; v < n; ++v) add(static_cast<std::size_t>(rng.index(v)), v);
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.uniform() < p) add(u, v);
  return WeightedGraph(n, std::move(edges));
}

inline std::vector<double> random_signal(Rng& rng, std::size_t n) {
  std::vector<double> f(n);
  for (double& x : f) x = rng.normal();
  return f;
}

inline double norm2(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

inline double dot(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

inline double max_abs_diff(const std::vector<double>& x, const std::vector<double>& y) {
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

}  // namespace sgwt::testing
