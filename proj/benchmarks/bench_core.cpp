#include <benchmark/benchmark.h>

#include "gsqg/analytic.hpp"
#include "gsqg/dynamics.hpp"
#include "gsqg/oracle.hpp"
#include "gsqg/velocity.hpp"
#include "support/shapes.hpp"

namespace {

using namespace gsqg;

void BM_EvalF(benchmark::State& state) {
  double beta = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_F(0.5, beta));
    beta = beta < 4.0 ? beta + 0.01 : 0.0;
  }
}
BENCHMARK(BM_EvalF);

void BM_BetaStar(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(beta_star(0.5));
}
BENCHMARK(BM_BetaStar);

void BM_ContourVelocity(benchmark::State& state) {
  const GsqgParams params{static_cast<double>(state.range(1)) / 2.0, 1.0};
  const ContourState st = frame(test::uniform_ellipse(static_cast<std::size_t>(state.range(0)), 1.5, 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(contour_velocity(st, params));
}
BENCHMARK(BM_ContourVelocity)
    ->ArgsProduct({{256, 512, 1024}, {0, 1, 2}})
    ->ArgNames({"N", "2alpha"})
    ->Unit(benchmark::kMillisecond);

void BM_Step(benchmark::State& state) {
  const GsqgParams params{1.0, 1.0};
  const ContourState st = frame(test::uniform_ellipse(static_cast<std::size_t>(state.range(0)), 1.5, 1.0));
  const double dt = 0.5 * dt_limit(st, params);
  for (auto _ : state) benchmark::DoNotOptimize(step(st, params, dt));
}
BENCHMARK(BM_Step)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_WedgeOracle(benchmark::State& state) {
  const CornerShape shape = corner_shape({1.0, 0.01, 1.0});
  const GsqgParams params{static_cast<double>(state.range(0)) / 2.0, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(wedge_oracle(shape, params, 0.1));
}
BENCHMARK(BM_WedgeOracle)->Arg(0)->Arg(1)->Arg(3)->ArgName("2alpha")->Unit(benchmark::kMillisecond);

void BM_CornerPatch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_corner_patch({1.0, 0.01, 1.0}, 1600.0));
}
BENCHMARK(BM_CornerPatch)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
