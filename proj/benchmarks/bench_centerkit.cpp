#include "centerkit/fiber_graph.hpp"
#include "centerkit/local_model.hpp"
#include "centerkit/melnikov.hpp"
#include "centerkit/orbit.hpp"
#include "centerkit/quadratic_bautin.hpp"
#include "centerkit/random.hpp"
#include "centerkit/tangent.hpp"

#include <benchmark/benchmark.h>

using namespace centerkit;

namespace {

LineArrangement sample(std::size_t lines, bool coprime, std::uint64_t seed) {
    Rng rng(seed);
    ArrangementSampling s;
    s.lines = lines;
    s.pairwise_coprime = coprime;
    s.max_multiplicity = 7;
    return random_arrangement(rng, s);
}

void BM_RealGraph(benchmark::State& state) {
    const auto arr = sample(static_cast<std::size_t>(state.range(0)), false, 7);
    for (auto _ : state) benchmark::DoNotOptimize(build_real_graph(arr).betti1());
}
BENCHMARK(BM_RealGraph)->DenseRange(3, 6);

void BM_WindingMatrix(benchmark::State& state) {
    const auto g = build_real_graph(sample(static_cast<std::size_t>(state.range(0)), false, 11));
    for (auto _ : state) benchmark::DoNotOptimize(winding_matrix(g));
}
BENCHMARK(BM_WindingMatrix)->DenseRange(3, 5);

void BM_OrbitTheorem(benchmark::State& state) {
    const auto arr = sample(static_cast<std::size_t>(state.range(0)), true, 3);
    for (auto _ : state) benchmark::DoNotOptimize(verify_orbit_theorem(arr).holds());
}
BENCHMARK(BM_OrbitTheorem)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_TangentDimensions(benchmark::State& state) {
    const auto base = log_params(sample(static_cast<std::size_t>(state.range(0)), false, 5));
    for (auto _ : state) benchmark::DoNotOptimize(tangent_dimensions(base).kernel_dim);
}
BENCHMARK(BM_TangentDimensions)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_Melnikov(benchmark::State& state) {
    const LineArrangement arr({{1, 0, 0}, {0, 1, 0}, {1, 1, -1}}, {1, 2, 3});
    auto omega = FoliationForm::zero(2);
    omega.coefficients[0] = 1;
    const double t = face_critical_value(arr, 0) / 2;
    for (auto _ : state) benchmark::DoNotOptimize(melnikov1(arr, 0, omega, t).value);
}
BENCHMARK(BM_Melnikov)->Unit(benchmark::kMillisecond);

void BM_LocalIterate(benchmark::State& state) {
    const auto model = build_local_model(state.range(0), state.range(0) + 1);
    for (auto _ : state) benchmark::DoNotOptimize(iterate(model, {}, model.lcm()));
}
BENCHMARK(BM_LocalIterate)->Arg(4)->Arg(12)->Arg(64);

void BM_BautinContainments(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_component_containments(1, 100).ok());
}
BENCHMARK(BM_BautinContainments)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
