#include <vector>

#ifdef SGWT_HAVE_OPENMP
#include <omp.h>
#endif

#include "doctest.h"
#include "sgwt/laplacian.hpp"
#include "sgwt/parallel/vector_ops.hpp"
#include "support/test_graphs.hpp"

using namespace sgwt;
using namespace sgwt::testing;

namespace {

// Sizes on both sides of the parallel threshold.
const std::size_t kSides[] = {5, 40, 90};

}  // namespace

TEST_SUITE("parallel kernels") {
  TEST_CASE("parallel kernels match the serial reference bit for bit") {
    Rng rng(21);
    for (std::size_t side : kSides) {
      const auto L = laplacian(grid_graph(side), LaplacianKind::normalized);
      const std::size_t n = L.size();
      const auto x = random_signal(rng, n);
      const auto z = random_signal(rng, n);
      const double shift = 1.2345;

      std::vector<double> a(n), b(n);
      par::spmv(L.csr(), x, a);
      ref::spmv(L.csr(), x, b);
      CHECK(a == b);

      par::chebyshev_first(L.csr(), shift, x, a);
      ref::chebyshev_first(L.csr(), shift, x, b);
      CHECK(a == b);

      par::chebyshev_step(L.csr(), shift, x, z, a);
      ref::chebyshev_step(L.csr(), shift, x, z, b);
      CHECK(a == b);

      a = z;
      b = z;
      par::axpy(-0.75, x, a);
      ref::axpy(-0.75, x, b);
      CHECK(a == b);

      par::scale_into(3.5, x, a);
      ref::scale_into(3.5, x, b);
      CHECK(a == b);

      a = z;
      b = z;
      par::xpby(x, 0.3, a);
      ref::xpby(x, 0.3, b);
      CHECK(a == b);

      CHECK(par::dot(x, z) == ref::dot(x, z));
    }
  }

  TEST_CASE("chebyshev_step may overwrite its prev operand") {
    Rng rng(22);
    const auto L = laplacian(grid_graph(50), LaplacianKind::unnormalized);
    const auto x = random_signal(rng, L.size());
    auto prev = random_signal(rng, L.size());
    std::vector<double> expect(L.size());
    ref::chebyshev_step(L.csr(), 4.0, x, prev, expect);
    par::chebyshev_step(L.csr(), 4.0, x, prev, prev);
    CHECK(prev == expect);
  }

  TEST_CASE("chebyshev_step is the shifted recurrence") {
    // P2 with shift a = 1: (2/a)(L - aI) x - z.
    const auto L = laplacian(path_graph(2), LaplacianKind::unnormalized);
    const std::vector<double> x{1.0, 0.0};
    const std::vector<double> z{0.5, 0.25};
    std::vector<double> out(2);
    ref::chebyshev_step(L.csr(), 1.0, x, z, out);
    CHECK(out == std::vector<double>{2.0 * (1.0 - 1.0) - 0.5, 2.0 * (-1.0) - 0.25});
  }

#ifdef SGWT_HAVE_OPENMP
  TEST_CASE("dot is independent of the thread count") {
    Rng rng(23);
    const auto x = random_signal(rng, 50000);
    const auto y = random_signal(rng, 50000);
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const double one = par::dot(x, y);
    omp_set_num_threads(3);
    const double three = par::dot(x, y);
    omp_set_num_threads(saved);
    CHECK(one == three);
    CHECK(one == ref::dot(x, y));
  }
#endif
}
