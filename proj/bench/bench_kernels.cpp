// Serial reference kernels against the OpenMP versions.
//
//   bench_kernels --benchmark_filter=Jacobi
//   OMP_NUM_THREADS=8 bench_kernels

#include <random>

#include <benchmark/benchmark.h>
#include <omp.h>

#include "edmsphere/kernels.hpp"

namespace {

using edmsphere::Index;
namespace kernels = edmsphere::kernels;

Eigen::MatrixXd random_symmetric(Index n) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(n));
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXd a(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j <= i; ++j) a(i, j) = a(j, i) = u(rng);
  return a;
}

Eigen::MatrixXd random_points(Index n, Index r) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(n * 31 + r));
  std::normal_distribution<double> g;
  Eigen::MatrixXd p(n, r);
  for (Index i = 0; i < p.size(); ++i) p.data()[i] = g(rng);
  return p;
}

void BM_JacobiReference(benchmark::State& state) {
  const auto a = random_symmetric(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::reference::jacobi_eigen(a));
}

void BM_JacobiParallel(benchmark::State& state) {
  const auto a = random_symmetric(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::jacobi_eigen(a));
  state.counters["threads"] = omp_get_max_threads();
}

void BM_DistancesReference(benchmark::State& state) {
  const auto p = random_points(state.range(0), 8);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::reference::squared_distances(p));
}

void BM_DistancesParallel(benchmark::State& state) {
  const auto p = random_points(state.range(0), 8);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::squared_distances(p));
}

void BM_DoubleCenterReference(benchmark::State& state) {
  const Index n = state.range(0);
  const auto d = kernels::reference::squared_distances(random_points(n, 8));
  const Eigen::VectorXd s = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::reference::double_center(d, s));
}

void BM_DoubleCenterParallel(benchmark::State& state) {
  const Index n = state.range(0);
  const auto d = kernels::reference::squared_distances(random_points(n, 8));
  const Eigen::VectorXd s = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::double_center(d, s));
}

}  // namespace

BENCHMARK(BM_JacobiReference)->Arg(32)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JacobiParallel)->Arg(32)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DistancesReference)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_DistancesParallel)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_DoubleCenterReference)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_DoubleCenterParallel)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
