#include <benchmark/benchmark.h>

#include <random>

#include "dicut/kernels.hpp"
#include "dicut/multigraph.hpp"

namespace {

using namespace dicut;

Array4 random_array(int k, int l, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> e(1.0);
  Array4 a(k, l);
  double total = 0.0;
  for (auto& x : a.data()) total += (x = e(rng));
  for (auto& x : a.data()) x /= total;
  return a;
}

Matrix random_matrix(int l, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Matrix m(l);
  for (auto& x : m.data()) x = u(rng);
  return m;
}

std::vector<double> random_adjacency(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> v(1, n);
  Multigraph g(static_cast<std::size_t>(n));
  for (int i = 0; i < 4 * n; ++i) {
    const int a = v(rng), b = v(rng);
    if (a != b) g.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
  }
  return g.dense_adjacency();
}

// Args: side (k = l), w.
template <class Fn>
void window_sum_bench(benchmark::State& state, Fn fn) {
  const int side = static_cast<int>(state.range(0));
  const int w = static_cast<int>(state.range(1));
  const auto a = random_array(side, side, 1);
  const kernels::WindowSumSpec spec{w, w, NormalizerKind::kSmooth};
  for (auto _ : state) benchmark::DoNotOptimize(fn(a, spec));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.size()));
}

void BM_WindowSumReference(benchmark::State& s) { window_sum_bench(s, kernels::reference::window_sum); }
void BM_WindowSumParallel(benchmark::State& s) { window_sum_bench(s, kernels::parallel::window_sum); }

template <class Fn>
void smooth_matrix_bench(benchmark::State& state, Fn fn) {
  const auto m = random_matrix(static_cast<int>(state.range(0)), 2);
  const int w = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(fn(m, w));
}

void BM_SmoothMatrixReference(benchmark::State& s) { smooth_matrix_bench(s, kernels::reference::smooth_matrix); }
void BM_SmoothMatrixParallel(benchmark::State& s) { smooth_matrix_bench(s, kernels::parallel::smooth_matrix); }

template <class Fn>
void scan_bench(benchmark::State& state, Fn fn) {
  const int n = static_cast<int>(state.range(0));
  const auto adj = random_adjacency(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(fn(adj, n));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}

void BM_ScanReference(benchmark::State& s) { scan_bench(s, kernels::reference::max_dicut_scan); }
void BM_ScanParallel(benchmark::State& s) { scan_bench(s, kernels::parallel::max_dicut_scan); }

}  // namespace

BENCHMARK(BM_WindowSumReference)->Args({8, 2})->Args({16, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WindowSumParallel)->Args({8, 2})->Args({16, 3})->Args({32, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SmoothMatrixReference)->Args({64, 4})->Args({256, 8});
BENCHMARK(BM_SmoothMatrixParallel)->Args({64, 4})->Args({256, 8});
BENCHMARK(BM_ScanReference)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
