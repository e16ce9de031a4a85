#include "sgwt/laplacian.hpp"

#include <algorithm>
#include <cmath>

#include "sgwt/error.hpp"

namespace sgwt {

LaplacianOperator::LaplacianOperator(const LaplacianOperator& other)
    : kind_(other.kind_),
      degrees_(other.degrees_),
      row_offsets_(other.row_offsets_),
      columns_(other.columns_),
      values_(other.values_),
      components_(other.components_),
      has_edges_(other.has_edges_),
      matvecs_(0) {}

LaplacianOperator& LaplacianOperator::operator=(const LaplacianOperator& other) {
  if (this != &other) {
    kind_ = other.kind_;
    degrees_ = other.degrees_;
    row_offsets_ = other.row_offsets_;
    columns_ = other.columns_;
    values_ = other.values_;
    components_ = other.components_;
    has_edges_ = other.has_edges_;
    matvecs_.store(0, std::memory_order_relaxed);
  }
  return *this;
}

LaplacianOperator laplacian(const WeightedGraph& g, LaplacianKind kind) {
  const std::size_t n = g.num_vertices();
  LaplacianOperator L;
  L.kind_ = kind;
  L.degrees_ = g.degrees();
  L.components_ = connected_components(g);

  std::vector<double> inv_sqrt(n, 0.0);
  if (kind == LaplacianKind::normalized) {
    for (std::size_t m = 0; m < n; ++m) {
      if (!(L.degrees_[m] > 0.0)) {
        throw DataError("normalized Laplacian undefined: vertex " + std::to_string(m) +
                        " is isolated");
      }
      inv_sqrt[m] = 1.0 / std::sqrt(L.degrees_[m]);
    }
  }

  L.row_offsets_.assign(n + 1, 0);
  for (std::size_t m = 0; m < n; ++m) {
    const auto row = g.neighbors(m);
    const bool has_loop = std::any_of(row.begin(), row.end(),
                                      [m](const Neighbor& nb) { return nb.vertex == m; });
    L.row_offsets_[m + 1] = L.row_offsets_[m] + row.size() + (has_loop ? 0 : 1);
  }
  L.columns_.resize(L.row_offsets_.back());
  L.values_.resize(L.row_offsets_.back());

  for (std::size_t m = 0; m < n; ++m) {
    std::size_t k = L.row_offsets_[m];
    bool diagonal_done = false;
    auto emit_diagonal = [&](double loop_weight) {
      L.columns_[k] = static_cast<std::uint32_t>(m);
      L.values_[k] = kind == LaplacianKind::unnormalized
                         ? L.degrees_[m] - loop_weight
                         : 1.0 - loop_weight * (inv_sqrt[m] * inv_sqrt[m]);
      ++k;
      diagonal_done = true;
    };
    for (const Neighbor& nb : g.neighbors(m)) {
      if (nb.vertex == m) {
        emit_diagonal(nb.weight);
        continue;
      }
      if (!diagonal_done && nb.vertex > m) emit_diagonal(0.0);
      L.columns_[k] = nb.vertex;
      L.values_[k] = kind == LaplacianKind::unnormalized
                         ? -nb.weight
                         : -nb.weight * (inv_sqrt[m] * inv_sqrt[nb.vertex]);
      L.has_edges_ = true;
      ++k;
    }
    if (!diagonal_done) emit_diagonal(0.0);
  }
  return L;
}

void LaplacianOperator::apply(std::span<const double> f, std::span<double> out) const {
  if (f.size() != size() || out.size() != size()) {
    throw InvalidArgument("Laplacian apply: vector length " + std::to_string(f.size()) +
                          " does not match N = " + std::to_string(size()));
  }
  par::spmv(csr(), f, out);
  record_matvecs(1);
}

std::vector<double> LaplacianOperator::apply(std::span<const double> f) const {
  std::vector<double> out(size());
  apply(f, out);
  return out;
}

double LaplacianOperator::entry(std::size_t row, std::size_t col) const {
  const auto first = columns_.begin() + static_cast<std::ptrdiff_t>(row_offsets_[row]);
  const auto last = columns_.begin() + static_cast<std::ptrdiff_t>(row_offsets_[row + 1]);
  const auto it = std::lower_bound(first, last, static_cast<std::uint32_t>(col));
  return (it != last && *it == col) ? values_[static_cast<std::size_t>(it - columns_.begin())]
                                    : 0.0;
}

std::vector<double> LaplacianOperator::to_dense() const {
  const std::size_t n = size();
  std::vector<double> dense(n * n, 0.0);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = row_offsets_[m]; k < row_offsets_[m + 1]; ++k) {
      dense[m * n + columns_[k]] = values_[k];
    }
  }
  return dense;
}

std::vector<double> apply_laplacian(const LaplacianOperator& L, std::span<const double> f) {
  return L.apply(f);
}

}  // namespace sgwt
