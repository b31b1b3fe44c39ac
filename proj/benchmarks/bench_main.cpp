#include <benchmark/benchmark.h>

#include <random>

#include "toricwhb/bundle.hpp"
#include "toricwhb/catalog.hpp"
#include "toricwhb/cox.hpp"
#include "toricwhb/lattice.hpp"
#include "toricwhb/primitive.hpp"
#include "toricwhb/whb.hpp"

using namespace toricwhb;

static void BM_PrimitiveRelationsTotalSpace(benchmark::State& state) {
    static const char* ids[] = {"S7", "S6", "M1", "pseudoV4", "V4"};
    const auto pb = catalog::named_bundle(ids[state.range(0)]);
    for (auto _ : state) benchmark::DoNotOptimize(primitive::primitive_relations(pb.total.fan));
    state.SetLabel(ids[state.range(0)]);
}
BENCHMARK(BM_PrimitiveRelationsTotalSpace)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

static void BM_ProjectivizeAndValidate(benchmark::State& state) {
    const auto pb = catalog::named_bundle("V4");
    for (auto _ : state) {
        auto t = bundle::projectivize(pb.spec);
        benchmark::DoNotOptimize(fan::validate(t.fan).ok());
    }
}
BENCHMARK(BM_ProjectivizeAndValidate)->Unit(benchmark::kMillisecond);

static void BM_KleinschmidtCriterion(benchmark::State& state) {
    const auto f = catalog::kleinschmidt(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(whb::admissible_primes(f));
}
BENCHMARK(BM_KleinschmidtCriterion)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

static void BM_SingularSearch(benchmark::State& state) {
    const auto pb = catalog::named_bundle("S7");
    const long q = state.range(0);
    const auto threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(cox::singular_point_search(pb.total.fan, pb.equation, q, 1u << 20, threads));
}
BENCHMARK(BM_SingularSearch)->Args({2, 1})->Args({4, 1})->Args({8, 1})->Args({8, 4})->Unit(benchmark::kMillisecond);

static void BM_DecideSmooth(benchmark::State& state) {
    const auto pb = catalog::named_bundle("V4");
    for (auto _ : state) benchmark::DoNotOptimize(cox::decide_smooth_monomial_partials(pb.total, pb.equation));
}
BENCHMARK(BM_DecideSmooth)->Unit(benchmark::kMicrosecond);

static void BM_SmithNormalForm(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> entry(-20, 20);
    lattice::IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
    for (auto _ : state) benchmark::DoNotOptimize(lattice::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMicrosecond);

static void BM_Pic3Sweep(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(whb::sweep_pic3_case_ii(state.range(0)));
}
BENCHMARK(BM_Pic3Sweep)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
