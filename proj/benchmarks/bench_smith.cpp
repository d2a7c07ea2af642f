#include <bihochster/random_complex.hpp>
#include <bihochster/smith.hpp>

#include <benchmark/benchmark.h>

using namespace bihochster;

namespace {

IntMatrix random_matrix(std::uint64_t seed, int rows, int cols, int spread) {
  SeededRng rng(seed);
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m.at(i, j) = int(rng.below(std::uint64_t(2 * spread + 1))) - spread;
  return m;
}

void bm_smith_dense(benchmark::State& state) {
  int n = int(state.range(0));
  IntMatrix m = random_matrix(0xb35c, n, n, 9);
  for (auto _ : state) {
    SmithDecomposition s = smith_normal_form(m);
    benchmark::DoNotOptimize(s.d);
  }
}

void bm_smith_rectangular(benchmark::State& state) {
  int n = int(state.range(0));
  IntMatrix m = random_matrix(0xb35d, n, 2 * n, 4);
  for (auto _ : state) {
    SmithDecomposition s = smith_normal_form(m);
    benchmark::DoNotOptimize(s.d);
  }
}

void bm_integer_solve(benchmark::State& state) {
  int n = int(state.range(0));
  IntMatrix m = random_matrix(0xb35e, n, n, 9);
  IntVec x(std::size_t(n), Int(3));
  IntVec b = m * x;
  IntegerSolver solver(m);
  for (auto _ : state) {
    auto sol = solver.solve(b);
    benchmark::DoNotOptimize(sol);
  }
}

}  // namespace

BENCHMARK(bm_smith_dense)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(bm_smith_rectangular)->Arg(8)->Arg(16);
BENCHMARK(bm_integer_solve)->Arg(8)->Arg(16)->Arg(32);

BENCHMARK_MAIN();
