// Micro benchmarks for the hot paths: quiver construction, the mesh
// recursion through the cover, clique enumeration and graph assembly.

#include <benchmark/benchmark.h>

#include "polyclus/mesh.hpp"
#include "polyclus/quiver.hpp"
#include "polyclus/tilting.hpp"

using namespace polyclus;

static void BM_BuildGammaE8(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(build_gamma_e8());
}
BENCHMARK(BM_BuildGammaE8);

static void BM_ExtTableE6(benchmark::State& state) {
    TranslationQuiver q = build_gamma_e6();
    for (auto _ : state) benchmark::DoNotOptimize(ext_table(q));
}
BENCHMARK(BM_ExtTableE6);

static void BM_ExtTableE8(benchmark::State& state) {
    TranslationQuiver q = build_gamma_e8();
    for (auto _ : state) benchmark::DoNotOptimize(ext_table(q));
}
BENCHMARK(BM_ExtTableE8);

static void BM_EnumerateE6(benchmark::State& state) {
    TranslationQuiver q = build_gamma_e6();
    ExtTable ext = ext_table(q);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_configurations(ext, 6));
}
BENCHMARK(BM_EnumerateE6);

static void BM_EnumerateE8(benchmark::State& state) {
    TranslationQuiver q = build_gamma_e8();
    ExtTable ext = ext_table(q);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_configurations(ext, 8));
}
BENCHMARK(BM_EnumerateE8);

static void BM_ExchangeGraphE6(benchmark::State& state) {
    TranslationQuiver q = build_gamma_e6();
    ExtTable ext = ext_table(q);
    auto configs = enumerate_configurations(ext, 6);
    for (auto _ : state) benchmark::DoNotOptimize(exchange_graph(ext, configs));
}
BENCHMARK(BM_ExchangeGraphE6);

static void BM_IsomorphismE8(benchmark::State& state) {
    TranslationQuiver q = build_gamma_e8();
    TranslationQuiver s = build_deck_quotient({1, 2, 4}, 16, false);
    for (auto _ : state) benchmark::DoNotOptimize(isomorphic_translation_quivers(q, s));
}
BENCHMARK(BM_IsomorphismE8);

BENCHMARK_MAIN();
