#include <benchmark/benchmark.h>

#include <numbers>

#include "cmctori/classify.hpp"
#include "cmctori/period.hpp"
#include "cmctori/profile.hpp"
#include "cmctori/surface_io.hpp"

namespace {

void BM_PeriodK(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(cmct::period_K(1.0, 6.0).value);
}
BENCHMARK(BM_PeriodK);

void BM_PeriodK_ExtremeC(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(cmct::period_K(0.0, 1e8).value);
}
BENCHMARK(BM_PeriodK_ExtremeC);

void BM_MonotonicityWitness(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(cmct::monotonicity_witness(1.0, 6.0));
}
BENCHMARK(BM_MonotonicityWitness);

void BM_ThetaOnePeriod(benchmark::State& state) {
    const cmct::ProfileSolution prof({1.0, 6.0});
    for (auto _ : state) benchmark::DoNotOptimize(prof.theta(prof.period()));
}
BENCHMARK(BM_ThetaOnePeriod);

void BM_SolveC(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(cmct::solve_C_for_m(1.0, 3).C);
}
BENCHMARK(BM_SolveC);

void BM_GenerateTorus(benchmark::State& state) {
    const cmct::TorusSpec spec = cmct::solve_C_for_m(1.0, 3);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(cmct::generate_torus(1.0, spec.C, 3, n, n).size());
}
BENCHMARK(BM_GenerateTorus)->Arg(96)->Arg(192);

void BM_VerifyClifford(benchmark::State& state) {
    const cmct::SurfaceMesh mesh =
        cmct::generate_clifford(1.0 / std::numbers::sqrt2, 128, 128);
    for (auto _ : state)
        benchmark::DoNotOptimize(cmct::verify_mesh(mesh, 0.0, state.range(0)).passed);
}
BENCHMARK(BM_VerifyClifford)->Arg(100000)->Arg(400000);

}  // namespace

BENCHMARK_MAIN();
