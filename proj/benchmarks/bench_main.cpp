#include <benchmark/benchmark.h>

#include "toric/basis.hpp"
#include "toric/hier.hpp"
#include "toric/ineq.hpp"
#include "toric/tfp.hpp"
#include "toric/verify.hpp"

using namespace toric;

static void BM_MarkovK4(benchmark::State& state) {
    Matrix B = design_matrix(HierModel::parse("[12][13][14][23][24][34]", {2, 2, 2, 2}));
    for (auto _ : state) benchmark::DoNotOptimize(markov_basis(kernel_lattice(B)));
}
BENCHMARK(BM_MarkovK4)->Unit(benchmark::kMillisecond);

static void BM_SubsetSums(benchmark::State& state) {
    auto sys = sums_system(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(inequality_markov_basis(sys));
}
BENCHMARK(BM_SubsetSums)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_ProductPipeline(benchmark::State& state) {
    Matrix B = Matrix::from_rows({{1, 1, 1, 1}, {0, 0, 1, 2}});
    auto g = GradedMatrix::make(B, {0, 1, 1, 2}, 3);
    auto g2 = GradedMatrix::make(B, {1, 0, 0, 2}, 3);
    for (auto _ : state) {
        auto t = build_tfp(g, g2);
        benchmark::DoNotOptimize(tfp_pipeline(t, pf_description(g), pf_description(g2)));
    }
}
BENCHMARK(BM_ProductPipeline)->Unit(benchmark::kMillisecond);

static void BM_TriangleGraver(benchmark::State& state) {
    int p = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(triangle_graver(p, p));
}
BENCHMARK(BM_TriangleGraver)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_TriangleGraverCompletion(benchmark::State& state) {
    int p = static_cast<int>(state.range(0));
    Lattice L = kernel_lattice(design_matrix(HierModel({{0, 1}, {0, 2}, {1, 2}}, {p, 2, p})));
    for (auto _ : state) benchmark::DoNotOptimize(graver_basis(L));
}
BENCHMARK(BM_TriangleGraverCompletion)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

static void BM_MarkovOracleC4(benchmark::State& state) {
    auto M = c4_basis(2, 2);
    auto fam = FiberFamily::matrix(design_matrix(c4_model(2, 2)));
    for (auto _ : state) benchmark::DoNotOptimize(markov_oracle(fam, M.moves, 4, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_MarkovOracleC4)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_MAIN();
