// Serial vs OpenMP cell evaluation in the plane cubature. Results are
// bit-identical between the two paths, so only wall time differs.
#include "hyperchow/numerics/curve_model.hpp"
#include "hyperchow/numerics/regulator.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

namespace {

using namespace hyperchow::numerics;

QuadratureOptions options_for(const benchmark::State& state) {
  QuadratureOptions o;
  o.parallel = state.range(0) != 0;
  o.tol = 1e-8;
  return o;
}

void label(benchmark::State& state) {
  state.SetLabel(state.range(0) != 0 ? "openmp x" + std::to_string(omp_get_max_threads()) : "serial");
}

void BM_ILambda(benchmark::State& state) {
  const auto o = options_for(state);
  std::size_t cells = 0;
  for (auto _ : state) {
    const auto r = I_of_lambda(cplx(2.0, 1.0), o);
    benchmark::DoNotOptimize(r.value);
    cells = r.cells_used;
  }
  state.counters["cells"] = static_cast<double>(cells);
  label(state);
}

// Gram matrix of a genus-3 curve: six weighted components per cell.
void BM_GramGenus3(benchmark::State& state) {
  const auto o = options_for(state);
  const ComplexCurveModel curve(1.0, {0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0});
  for (auto _ : state) {
    const auto g = gram_normalize(curve, o);
    benchmark::DoNotOptimize(g.gram.data());
    state.counters["cells"] = static_cast<double>(g.cells_used);
  }
  label(state);
}

}  // namespace

BENCHMARK(BM_ILambda)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GramGenus3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
