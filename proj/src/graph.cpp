#include "sgwt/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <numeric>
#include <sstream>

#include "sgwt/error.hpp"
#include "sgwt/random.hpp"

namespace sgwt {

namespace {

std::string edge_name(std::size_t u, std::size_t v) {
  std::ostringstream os;
  os << "(" << u << ", " << v << ")";
  return os.str();
}

}  // namespace

WeightedGraph::WeightedGraph(std::size_t num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices_ == 0) throw DataError("graph must have at least one vertex");
  if (num_vertices_ > std::numeric_limits<std::uint32_t>::max()) {
    throw DataError("graph too large for 32-bit vertex indices");
  }
  for (Edge& e : edges_) {
    if (e.u >= num_vertices_ || e.v >= num_vertices_) {
      throw DataError("edge " + edge_name(e.u, e.v) + " references a vertex >= N = " +
                      std::to_string(num_vertices_));
    }
    if (!std::isfinite(e.w) || e.w <= 0.0) {
      throw DataError("edge " + edge_name(e.u, e.v) + " has non-positive or non-finite weight");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  for (std::size_t k = 1; k < edges_.size(); ++k) {
    if (edges_[k].u == edges_[k - 1].u && edges_[k].v == edges_[k - 1].v) {
      throw DataError("duplicate edge " + edge_name(edges_[k].u, edges_[k].v));
    }
  }

  std::vector<std::size_t> count(num_vertices_, 0);
  for (const Edge& e : edges_) {
    ++count[e.u];
    if (e.v != e.u) ++count[e.v];
  }
  offsets_.assign(num_vertices_ + 1, 0);
  std::partial_sum(count.begin(), count.end(), offsets_.begin() + 1);
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[fill[e.u]++] = {static_cast<std::uint32_t>(e.v), e.w};
    if (e.v != e.u) adjacency_[fill[e.v]++] = {static_cast<std::uint32_t>(e.u), e.w};
  }
  for (std::size_t u = 0; u < num_vertices_; ++u) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[u]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[u + 1]),
              [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
  }
}

double WeightedGraph::weight(std::size_t u, std::size_t v) const {
  const auto row = neighbors(u);
  const auto it = std::lower_bound(row.begin(), row.end(), v,
                                   [](const Neighbor& n, std::size_t x) { return n.vertex < x; });
  return (it != row.end() && it->vertex == v) ? it->weight : 0.0;
}

std::vector<double> WeightedGraph::degrees() const {
  std::vector<double> d(num_vertices_, 0.0);
  for (std::size_t u = 0; u < num_vertices_; ++u) {
    for (const Neighbor& n : neighbors(u)) d[u] += n.weight;
  }
  return d;
}

GridMask::GridMask(std::size_t height, std::size_t width, std::vector<bool> pixels)
    : height_(height), width_(width), pixels_(std::move(pixels)) {
  if (height_ == 0 || width_ == 0) throw DataError("grid mask must have positive size");
  if (pixels_.size() != height_ * width_) throw DataError("grid mask pixel count mismatch");
  if (std::none_of(pixels_.begin(), pixels_.end(), [](bool b) { return b; })) {
    throw DataError("grid mask has no pixel inside the domain");
  }
}

PointCloud::PointCloud(const std::vector<std::vector<double>>& points) {
  if (points.empty()) throw DataError("point cloud is empty");
  dimension_ = points.front().size();
  if (dimension_ == 0) throw DataError("points must have at least one coordinate");
  coords_.reserve(points.size() * dimension_);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != dimension_) {
      throw DataError("point " + std::to_string(i) + " has dimension " +
                      std::to_string(points[i].size()) + ", expected " +
                      std::to_string(dimension_));
    }
    for (double x : points[i]) {
      if (!std::isfinite(x)) throw DataError("point " + std::to_string(i) + " is not finite");
      coords_.push_back(x);
    }
  }
}

PointCloud::PointCloud(std::size_t dimension, std::vector<double> coordinates)
    : dimension_(dimension), coords_(std::move(coordinates)) {
  if (dimension_ == 0 || coords_.empty() || coords_.size() % dimension_ != 0) {
    throw DataError("coordinate count is not a positive multiple of the dimension");
  }
  if (!std::all_of(coords_.begin(), coords_.end(), [](double x) { return std::isfinite(x); })) {
    throw DataError("point cloud has non-finite coordinates");
  }
}

WeightedGraph build_from_edge_list(std::size_t num_vertices, std::span<const EdgeRecord> records) {
  std::vector<Edge> edges;
  edges.reserve(records.size());
  for (const EdgeRecord& r : records) {
    if (r.u < 0 || r.v < 0) {
      throw DataError("negative vertex index in edge (" + std::to_string(r.u) + ", " +
                      std::to_string(r.v) + ")");
    }
    edges.push_back({static_cast<std::size_t>(r.u), static_cast<std::size_t>(r.v), r.w});
  }
  return WeightedGraph(num_vertices, std::move(edges));
}

WeightedGraph build_from_point_cloud(const PointCloud& cloud, double sigma,
                                     std::optional<double> threshold) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw InvalidArgument("sigma must be positive");
  if (threshold && !(*threshold >= 0.0)) throw InvalidArgument("threshold must be non-negative");
  const std::size_t n = cloud.size();
  const double scale = 1.0 / (2.0 * sigma * sigma);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    const auto xi = cloud.point(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto xj = cloud.point(j);
      double dist2 = 0.0;
      for (std::size_t k = 0; k < xi.size(); ++k) {
        const double d = xi[k] - xj[k];
        dist2 += d * d;
      }
      const double w = std::exp(-dist2 * scale);
      if (w <= 0.0) continue;
      if (threshold && w < *threshold) continue;
      edges.push_back({i, j, w});
    }
  }
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph build_from_grid_mask(const GridMask& mask) {
  const std::size_t h = mask.height();
  const std::size_t w = mask.width();
  std::vector<std::size_t> id(h * w, kUnreachable);
  std::size_t next = 0;
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      if (mask.at(r, c)) id[r * w + c] = next++;
    }
  }
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      if (!mask.at(r, c)) continue;
      if (c + 1 < w && mask.at(r, c + 1)) edges.push_back({id[r * w + c], id[r * w + c + 1], 1.0});
      if (r + 1 < h && mask.at(r + 1, c)) edges.push_back({id[r * w + c], id[(r + 1) * w + c], 1.0});
    }
  }
  return WeightedGraph(next, std::move(edges));
}

PointCloud sample_swiss_roll(std::size_t count, Rng& rng) {
  constexpr double pi = std::numbers::pi;
  // Area element of the roll is sqrt(1 + t^2) / 4pi ds dt; sample t by
  // rejection against its maximum at t = 4pi.
  const double t_lo = pi;
  const double t_hi = 4.0 * pi;
  const double density_max = std::sqrt(1.0 + t_hi * t_hi);
  std::vector<double> coords;
  coords.reserve(3 * count);
  for (std::size_t i = 0; i < count; ++i) {
    double t = 0.0;
    do {
      t = rng.uniform(t_lo, t_hi);
    } while (rng.uniform() * density_max > std::sqrt(1.0 + t * t));
    const double s = rng.uniform(-1.0, 1.0);
    coords.push_back(t * std::cos(t) / (4.0 * pi));
    coords.push_back(s);
    coords.push_back(t * std::sin(t) / (4.0 * pi));
  }
  return PointCloud(3, std::move(coords));
}

std::vector<std::size_t> hop_distance(const WeightedGraph& g, std::size_t source) {
  if (source >= g.num_vertices()) throw InvalidArgument("source vertex out of range");
  std::vector<std::size_t> dist(g.num_vertices(), kUnreachable);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (const Neighbor& n : g.neighbors(u)) {
      if (dist[n.vertex] == kUnreachable) {
        dist[n.vertex] = dist[u] + 1;
        queue.push_back(n.vertex);
      }
    }
  }
  return dist;
}

std::size_t connected_components(const WeightedGraph& g) {
  std::vector<std::size_t> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::size_t components = g.num_vertices();
  for (const Edge& e : g.edges()) {
    const std::size_t a = find(e.u);
    const std::size_t b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

}  // namespace sgwt
