#include "cnf/dynamics3.hpp"
#include "cnf/padic3.hpp"
#include "cnf/periods.hpp"
#include "cnf/quadforms.hpp"
#include "cnf/resultant.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace cnf;

void bm_class_number(benchmark::State& state) {
  const std::int64_t d = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(class_number(d));
}
BENCHMARK(bm_class_number)->Arg(35)->Arg(5323)->Arg(971)->Arg(1000003 * 4 - 1);

void bm_enumerate_set(benchmark::State& state) {
  const auto p = state.range(0);
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_set(p, n));
}
BENCHMARK(bm_enumerate_set)->Args({3, 6})->Args({11, 3})->Args({23, 3})->Unit(benchmark::kMillisecond);

// Res_t(f(x, t), f(t, y)): the step from R^(1) to R^(2).
void bm_resultant_bivariate(benchmark::State& state) {
  const BiPoly& f = core_curves().f;
  for (auto _ : state) benchmark::DoNotOptimize(resultant_bivariate(f, f));
}
BENCHMARK(bm_resultant_bivariate)->Unit(benchmark::kMillisecond);

// Res_t(R^(2)(x, t), f(t, x)): the shared-variable step producing R_3.
void bm_resultant_shared(benchmark::State& state) {
  const BiPoly& r2 = build_Rn_bivariate(2);
  const BiPoly ft = core_curves().f.swapped();
  for (auto _ : state) benchmark::DoNotOptimize(resultant_shared(r2, ft));
}
BENCHMARK(bm_resultant_shared)->Unit(benchmark::kMillisecond);

void bm_branch_F(benchmark::State& state) {
  const auto ring = std::make_shared<const GaloisRing>(default_modulus(static_cast<int>(state.range(0))),
                                                       static_cast<unsigned>(state.range(1)));
  const auto z = frobenius_samples(1, static_cast<int>(state.range(0)), static_cast<unsigned>(state.range(1)), 5).front();
  for (auto _ : state) benchmark::DoNotOptimize(branch_F(z));
}
BENCHMARK(bm_branch_F)->Args({1, 32})->Args({4, 32})->Args({4, 256});

}  // namespace

BENCHMARK_MAIN();
