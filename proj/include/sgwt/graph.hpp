#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace sgwt {

class Rng;

/// Raw edge as read from input. Signed so that negative indices in a file
/// can be reported instead of wrapping around.
struct EdgeRecord {
  std::int64_t u = 0;
  std::int64_t v = 0;
  double w = 0.0;
};

/// Canonical undirected edge, u <= v.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  double w = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  std::uint32_t vertex = 0;
  double weight = 0.0;
};

/// Undirected graph with strictly positive finite weights over vertices
/// 0..N-1. Loops are allowed and appear once in the adjacency of their
/// vertex. Immutable once built.
class WeightedGraph {
 public:
  /// Validates and canonicalizes `edges`. Throws DataError on an index out
  /// of range, a non-positive or non-finite weight, or a repeated undirected
  /// edge.
  WeightedGraph(std::size_t num_vertices, std::vector<Edge> edges);

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }

  /// Edges sorted by (u, v) with u <= v.
  std::span<const Edge> edges() const { return edges_; }

  /// Neighbors of `u` sorted by vertex index; a loop lists `u` itself.
  std::span<const Neighbor> neighbors(std::size_t u) const {
    return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
  }

  /// a_{u,v}; zero when the edge is absent.
  double weight(std::size_t u, std::size_t v) const;

  /// d(m) = sum_n a_{m,n}; a loop contributes its weight once.
  std::vector<double> degrees() const;

 private:
  std::size_t num_vertices_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
};

/// Boolean image; true pixels belong to the domain.
class GridMask {
 public:
  /// Throws DataError if sizes disagree or no pixel is set.
  GridMask(std::size_t height, std::size_t width, std::vector<bool> pixels);

  std::size_t height() const { return height_; }
  std::size_t width() const { return width_; }
  bool at(std::size_t row, std::size_t col) const { return pixels_[row * width_ + col]; }

  static GridMask full(std::size_t height, std::size_t width) {
    return GridMask(height, width, std::vector<bool>(height * width, true));
  }

 private:
  std::size_t height_;
  std::size_t width_;
  std::vector<bool> pixels_;
};

/// N points in R^d stored row-major.
class PointCloud {
 public:
  /// Throws DataError on ragged rows or non-finite coordinates.
  explicit PointCloud(const std::vector<std::vector<double>>& points);
  PointCloud(std::size_t dimension, std::vector<double> coordinates);

  std::size_t size() const { return dimension_ == 0 ? 0 : coords_.size() / dimension_; }
  std::size_t dimension() const { return dimension_; }
  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dimension_, dimension_};
  }

 private:
  std::size_t dimension_ = 0;
  std::vector<double> coords_;
};

WeightedGraph build_from_edge_list(std::size_t num_vertices, std::span<const EdgeRecord> records);

/// Complete graph with Gaussian weights exp(-|x_i - x_j|^2 / (2 sigma^2)).
/// Edges lighter than `threshold` (and weights that underflow to zero) are
/// dropped. No loops.
WeightedGraph build_from_point_cloud(const PointCloud& cloud, double sigma,
                                     std::optional<double> threshold = std::nullopt);

/// 4-connected unit-weight graph on the true pixels, numbered in row-major
/// order.
WeightedGraph build_from_grid_mask(const GridMask& mask);

/// `count` points sampled uniformly (by area) on the Swiss roll
/// x(s,t) = (t cos t / 4pi, s, t sin t / 4pi), s in [-1,1], t in [pi, 4pi].
PointCloud sample_swiss_roll(std::size_t count, Rng& rng);

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// Breadth-first hop counts from `source`, ignoring weights. Unreachable
/// vertices get kUnreachable.
std::vector<std::size_t> hop_distance(const WeightedGraph& g, std::size_t source);

std::size_t connected_components(const WeightedGraph& g);

}  // namespace sgwt
