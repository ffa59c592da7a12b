#include <benchmark/benchmark.h>

#include <random>

#include "lefdec/closure.hpp"
#include "lefdec/config.hpp"
#include "lefdec/diagrams.hpp"
#include "lefdec/isotypic.hpp"

using namespace lefdec;

namespace {

Mat random_rational_mat(const Field* f, int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long v = static_cast<long>(rng() % 9) - 4;
      if (v) m.set(i, j, f->from_rational(Rational(v)));
    }
  return m;
}

void BM_rref(benchmark::State& state) {
  const Field* f = intern_rationals().get();
  Mat m = random_rational_mat(f, static_cast<int>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_rref)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_min_poly(benchmark::State& state) {
  const Field* f = intern_rationals().get();
  Mat m = random_rational_mat(f, static_cast<int>(state.range(0)), 43);
  for (auto _ : state) benchmark::DoNotOptimize(min_poly_of(m).degree());
}
BENCHMARK(BM_min_poly)->Arg(8)->Arg(16)->Arg(32);

void BM_centralizer(benchmark::State& state) {
  Config cfg = preset("siegel", {.g = static_cast<int>(state.range(0))});
  for (auto _ : state)
    benchmark::DoNotOptimize(centralizer_basis(cfg.data, 2).dim());
}
BENCHMARK(BM_centralizer)->Arg(1)->Arg(2)->Arg(3);

void BM_closure(benchmark::State& state) {
  Config cfg = preset("siegel", {.g = 1});
  int n = static_cast<int>(state.range(0));
  TensorSpace ts{2, n};
  auto gens = bn_generators(cfg.data, n);
  for (auto _ : state) {
    auto span = algebra_closure(cfg.data.field(),
                                static_cast<int>(ts.dim()), gens, Budgets{});
    benchmark::DoNotOptimize(span.dim());
  }
}
BENCHMARK(BM_closure)->Arg(2)->Arg(3)->Arg(4);

void BM_diagram_span(benchmark::State& state) {
  Config cfg = preset("siegel", {.g = 2});
  int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(diagram_span(cfg.data, n).dim());
}
BENCHMARK(BM_diagram_span)->Arg(2)->Arg(3);

void BM_decompose(benchmark::State& state) {
  Config cfg = preset("siegel", {.g = 1});
  for (auto _ : state) {
    auto rep = decompose(cfg.data, 2, 2);
    benchmark::DoNotOptimize(rep.components.size());
  }
}
BENCHMARK(BM_decompose);

}  // namespace

BENCHMARK_MAIN();
