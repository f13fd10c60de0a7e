#include "fanocfg/fano.hpp"
#include "fanocfg/groebner.hpp"
#include "fanocfg/lattice.hpp"
#include "fanocfg/poly_text.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace fanocfg;

namespace {

const GramMatrix& klein_gram() {
    static const GramMatrix g = gram_from_group(enumerate_group("psl2_11"), IntersectionRule::geometric());
    return g;
}

void BM_SnfRandom(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> d(-20, 20);
    IntMatrix m(n, n, Integer(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
    for (auto _ : state) benchmark::DoNotOptimize(snf(m));
}
BENCHMARK(BM_SnfRandom)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_SnfKleinGram(benchmark::State& state) {
    const IntMatrix& m = klein_gram().matrix();
    for (auto _ : state) benchmark::DoNotOptimize(snf(m));
}
BENCHMARK(BM_SnfKleinGram)->Unit(benchmark::kMillisecond);

void BM_KleinGram(benchmark::State& state) {
    const FiniteGroup g = enumerate_group("psl2_11");
    for (auto _ : state) benchmark::DoNotOptimize(gram_from_group(g, IntersectionRule::geometric()));
}
BENCHMARK(BM_KleinGram)->Unit(benchmark::kMillisecond);

void BM_KleinInvariants(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(lattice_invariants(klein_gram()));
}
BENCHMARK(BM_KleinInvariants)->Unit(benchmark::kMillisecond);

void BM_SmoothKlein(benchmark::State& state) {
    const QPoly f = klein_cubic();
    for (auto _ : state) benchmark::DoNotOptimize(smooth_cubic(f));
}
BENCHMARK(BM_SmoothKlein)->Unit(benchmark::kMillisecond);

void BM_GroebnerFermatPartials(benchmark::State& state) {
    const auto gens = partials(fermat_cubic());
    for (auto _ : state) benchmark::DoNotOptimize(groebner(std::span<const QPoly>(gens)));
}
BENCHMARK(BM_GroebnerFermatPartials)->Unit(benchmark::kMicrosecond);

void BM_LambdaSurvey(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(lambda_survey());
}
BENCHMARK(BM_LambdaSurvey)->Unit(benchmark::kSecond)->Iterations(1);

} // namespace

BENCHMARK_MAIN();
