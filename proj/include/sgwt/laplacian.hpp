#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sgwt/graph.hpp"
#include "sgwt/parallel/vector_ops.hpp"

namespace sgwt {

enum class LaplacianKind { unnormalized, normalized };

/// Sparse symmetric graph Laplacian in CSR form.
///
/// Unnormalized: L = D - A, so the diagonal is d(m) - a_{m,m}.
/// Normalized:   L = I - D^{-1/2} A D^{-1/2}.
///
/// The operator is immutable apart from a relaxed atomic counter of
/// matrix-vector products, which is diagnostic only.
class LaplacianOperator {
 public:
  LaplacianOperator(const LaplacianOperator& other);
  LaplacianOperator& operator=(const LaplacianOperator& other);

  LaplacianKind kind() const { return kind_; }
  std::size_t size() const { return degrees_.size(); }
  std::size_t stored_entries() const { return values_.size(); }
  std::span<const double> degrees() const { return degrees_; }

  /// Connected components of the underlying graph.
  std::size_t num_components() const { return components_; }

  /// True if at least one off-diagonal entry is nonzero.
  bool has_edges() const { return has_edges_; }

  CsrView csr() const { return {row_offsets_, columns_, values_}; }

  /// out = L f using the parallel kernel. Throws InvalidArgument on size
  /// mismatch.
  void apply(std::span<const double> f, std::span<double> out) const;
  std::vector<double> apply(std::span<const double> f) const;

  /// L[row][col], zero when not stored.
  double entry(std::size_t row, std::size_t col) const;

  /// Row-major dense copy; meant for oracle-sized problems.
  std::vector<double> to_dense() const;

  std::uint64_t matvec_count() const { return matvecs_.load(std::memory_order_relaxed); }
  void reset_matvec_count() const { matvecs_.store(0, std::memory_order_relaxed); }
  /// Used by kernels that fold the product into a fused loop.
  void record_matvecs(std::uint64_t n) const { matvecs_.fetch_add(n, std::memory_order_relaxed); }

 private:
  friend LaplacianOperator laplacian(const WeightedGraph& g, LaplacianKind kind);
  LaplacianOperator() = default;

  LaplacianKind kind_ = LaplacianKind::unnormalized;
  std::vector<double> degrees_;
  std::vector<std::size_t> row_offsets_;
  std::vector<std::uint32_t> columns_;
  std::vector<double> values_;
  std::size_t components_ = 0;
  bool has_edges_ = false;
  mutable std::atomic<std::uint64_t> matvecs_{0};
};

/// Throws DataError when the normalized kind is requested for a graph with
/// an isolated vertex.
LaplacianOperator laplacian(const WeightedGraph& g, LaplacianKind kind);

/// Exact sparse product L f.
std::vector<double> apply_laplacian(const LaplacianOperator& L, std::span<const double> f);

}  // namespace sgwt
