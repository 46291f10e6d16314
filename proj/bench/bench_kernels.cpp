// Serial reference against the OpenMP path for the core kernels.
// Run with OMP_NUM_THREADS set to compare thread counts.

#include <benchmark/benchmark.h>

#include "rcalg/algebra_file.hpp"
#include "rcalg/brackets.hpp"
#include "rcalg/expr.hpp"
#include "rcalg/kernels.hpp"
#include "rcalg/qseries.hpp"

using namespace rcalg;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

const LoadedAlgebra& negweights() {
  static const LoadedAlgebra l = load_algebra("negweights");
  return l;
}

void BM_Multiply(benchmark::State& state) {
  const AlgebraPtr& alg = negweights().algebra;
  const GradedPoly f = parse_expr("(a + b*u + c*u^2 + u*E2 + 1)", alg).pow(static_cast<unsigned>(state.range(1)));
  const GradedPoly g = parse_expr("(a*u^3 - b + 2*E2 + c*u)", alg).pow(static_cast<unsigned>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiply(f.terms(), g.terms(), exec_of(state)));
  label(state);
}
BENCHMARK(BM_Multiply)->ArgsProduct({{0, 1}, {4, 6}})->Unit(benchmark::kMillisecond);

void BM_Convolve(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(1));
  const QSeries e4 = eisenstein(4, static_cast<unsigned>(len)), e6 = eisenstein(6, static_cast<unsigned>(len));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::convolve(e4.coeffs(), e6.coeffs(), len, exec_of(state)));
  label(state);
}
BENCHMARK(BM_Convolve)->ArgsProduct({{0, 1}, {200, 800}})->Unit(benchmark::kMillisecond);

void BM_StandardBracket(benchmark::State& state) {
  const LoadedAlgebra& l = negweights();
  const GradedPoly f = parse_expr("a*u^2 + b*u^3", l.algebra), g = parse_expr("c*u + a*b*u", l.algebra);
  const auto n = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(standard_bracket(l.D, f, g, n, exec_of(state)));
  label(state);
}
BENCHMARK(BM_StandardBracket)->ArgsProduct({{0, 1}, {4, 8}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
