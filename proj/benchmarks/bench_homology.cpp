#include <bihochster/hochster.hpp>
#include <bihochster/homology.hpp>
#include <bihochster/random_complex.hpp>
#include <bihochster/simplicial_complex.hpp>

#include <benchmark/benchmark.h>

using namespace bihochster;

namespace {

SimplicialComplex cycle_with_chord() {
  return from_facets(4, {Face::of({1, 2}), Face::of({1, 3}), Face::of({2, 3}),
                         Face::of({2, 4}), Face::of({3, 4})});
}

SimplicialComplex sphere_boundary(int m) {
  std::vector<Face> gens;
  Face full = Face::full(m);
  for (int v = 1; v <= m; ++v) gens.push_back(full.without(v));
  return from_facets(m, gens);
}

void bm_reduced_homology(benchmark::State& state) {
  SimplicialComplex k = sphere_boundary(int(state.range(0)));
  for (auto _ : state) {
    HomologyBasis h = reduced_homology(k);
    benchmark::DoNotOptimize(h.top_degree());
  }
}

void bm_hochster_table(benchmark::State& state) {
  SimplicialComplex k = random_complex(int(state.range(0)), Density{}, 0xca11);
  for (auto _ : state) {
    BigradedTable t = hochster_table(k);
    benchmark::DoNotOptimize(t.rows());
  }
}

void bm_double_homology_chord(benchmark::State& state) {
  SimplicialComplex k = cycle_with_chord();
  for (auto _ : state) {
    BigradedTable t = double_homology(k);
    benchmark::DoNotOptimize(t.rows());
  }
}

void bm_double_homology_sphere(benchmark::State& state) {
  SimplicialComplex k = sphere_boundary(int(state.range(0)));
  for (auto _ : state) {
    BigradedTable t = double_homology(k);
    benchmark::DoNotOptimize(t.rows());
  }
}

void bm_double_homology_random(benchmark::State& state) {
  SimplicialComplex k = random_complex(int(state.range(0)), Density{}, 0xd0d0);
  for (auto _ : state) {
    BigradedTable t = double_homology(k);
    benchmark::DoNotOptimize(t.rows());
  }
}

}  // namespace

BENCHMARK(bm_reduced_homology)->Arg(5)->Arg(7);
BENCHMARK(bm_hochster_table)->Arg(5)->Arg(6);
BENCHMARK(bm_double_homology_chord);
BENCHMARK(bm_double_homology_sphere)->Arg(4)->Arg(5);
BENCHMARK(bm_double_homology_random)->Arg(5)->Arg(6);
