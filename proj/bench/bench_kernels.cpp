// Serial reference vs OpenMP kernels, plus the full forward transform.
//
//   ./sgwt_bench --benchmark_filter=Spmv
//   OMP_NUM_THREADS=4 ./sgwt_bench

#include <benchmark/benchmark.h>

#include <memory>
#include <vector>

#include "sgwt/sgwt.hpp"

namespace {

using namespace sgwt;

const LaplacianOperator& grid(std::size_t side) {
  static std::vector<std::unique_ptr<LaplacianOperator>> cache(1025);
  auto& slot = cache[side];
  if (!slot) {
    slot = std::make_unique<LaplacianOperator>(
        laplacian(build_from_grid_mask(GridMask::full(side, side)), LaplacianKind::unnormalized));
  }
  return *slot;
}

std::vector<double> signal(std::size_t n) {
  Rng rng(3);
  std::vector<double> f(n);
  for (double& x : f) x = rng.normal();
  return f;
}

template <bool Parallel>
void BM_Spmv(benchmark::State& state) {
  const auto& L = grid(static_cast<std::size_t>(state.range(0)));
  const auto x = signal(L.size());
  std::vector<double> y(L.size());
  for (auto _ : state) {
    if constexpr (Parallel) {
      par::spmv(L.csr(), x, y);
    } else {
      ref::spmv(L.csr(), x, y);
    }
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(L.stored_entries()));
}

template <bool Parallel>
void BM_ChebyshevStep(benchmark::State& state) {
  const auto& L = grid(static_cast<std::size_t>(state.range(0)));
  const auto x = signal(L.size());
  auto prev = signal(L.size());
  std::vector<double> out(L.size());
  for (auto _ : state) {
    if constexpr (Parallel) {
      par::chebyshev_step(L.csr(), 4.0, x, prev, out);
    } else {
      ref::chebyshev_step(L.csr(), 4.0, x, prev, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(L.stored_entries()));
}

template <bool Parallel>
void BM_Dot(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0)) * static_cast<std::size_t>(state.range(0));
  const auto x = signal(n);
  const auto y = signal(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? par::dot(x, y) : ref::dot(x, y));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n));
}

void BM_Forward(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  auto L = std::make_shared<const LaplacianOperator>(grid(side));
  const auto pt = prepare(TransformDesign::make(estimate_lambda_max(*L).lambda_max), L, {50});
  const auto f = signal(L->size());
  for (auto _ : state) {
    auto c = forward(pt, f);
    benchmark::DoNotOptimize(c.values().data());
  }
}

}  // namespace

BENCHMARK(BM_Spmv<false>)->Name("Spmv/ref")->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_Spmv<true>)->Name("Spmv/par")->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_ChebyshevStep<false>)->Name("ChebyshevStep/ref")->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_ChebyshevStep<true>)->Name("ChebyshevStep/par")->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_Dot<false>)->Name("Dot/ref")->Arg(256)->Arg(1024);
BENCHMARK(BM_Dot<true>)->Name("Dot/par")->Arg(256)->Arg(1024);
BENCHMARK(BM_Forward)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
