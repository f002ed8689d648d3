#include <benchmark/benchmark.h>

#include "eog/containment.hpp"
#include "eog/io.hpp"
#include "eog/leaning.hpp"
#include "eog/matrix01.hpp"
#include "eog/turan.hpp"
#include "eog/verify.hpp"

using namespace eog;

static void BM_Contains(benchmark::State& state) {
    Rng rng(1);
    const Graph g = random_graph(rng, static_cast<int>(state.range(0)), 0.5);
    const Graph h = parse_path("P:13254");
    for (auto _ : state) benchmark::DoNotOptimize(contains(g, h));
}
BENCHMARK(BM_Contains)->Arg(8)->Arg(16)->Arg(32);

static void BM_CanonicalCode(benchmark::State& state) {
    Rng rng(2);
    const Graph g = random_graph(rng, static_cast<int>(state.range(0)), 0.4);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_code(g));
}
BENCHMARK(BM_CanonicalCode)->Arg(6)->Arg(12)->Arg(24);

static void BM_ExactEx(benchmark::State& state) {
    const Graph h = parse_path("P:2143");
    Budget b;
    b.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(exact_ex(static_cast<int>(state.range(0)), h, b).value);
}
BENCHMARK(BM_ExactEx)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_ExactExWitnessMode(benchmark::State& state) {
    const Graph h = parse_path("P:15243");
    Budget b;
    b.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(exact_ex(6, h, b).value);
}
BENCHMARK(BM_ExactExWitnessMode)->Unit(benchmark::kMillisecond);

static void BM_EnumerateBigraphs(benchmark::State& state) {
    for (auto _ : state) {
        long long count = 0;
        enumerate_bigraphs(static_cast<int>(state.range(0)), [&](const Bigraph&) {
            ++count;
            return true;
        });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateBigraphs)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_LeaningIterate(benchmark::State& state) {
    Rng rng(3);
    const Bigraph b = random_bigraph(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(iterate(b, 3, 3, Lean::Left).levels.size());
}
BENCHMARK(BM_LeaningIterate)->Arg(20)->Arg(40);

static void BM_Eex(benchmark::State& state) {
    const Matrix01 b = Matrix01::parse("11;11");
    for (auto _ : state) benchmark::DoNotOptimize(eex_exact(static_cast<int>(state.range(0)), b).value);
}
BENCHMARK(BM_Eex)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
