// Serial reference against the OpenMP kernels on batches of brackets.

#include "wn/canonical.hpp"
#include "wn/kernels.hpp"
#include "wn/sampling.hpp"
#include "wn/span.hpp"

#include <benchmark/benchmark.h>

using namespace wn;

namespace {

std::vector<Derivation> batch(std::size_t n, std::size_t count) {
    Sampler rng(7);
    const SampleShape shape{4, 4, 9, 9};
    std::vector<Derivation> out;
    for (std::size_t k = 0; k < count; ++k) out.push_back(rng.derivation(n, shape));
    return out;
}

void BM_BracketPairs(benchmark::State& state, kernels::Exec exec) {
    const auto elems = batch(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
    const auto pairs = kernels::upper_pairs(elems.size());
    for (auto _ : state) benchmark::DoNotOptimize(kernels::bracket_pairs(elems, pairs, exec));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pairs.size()));
}

void BM_Witness(benchmark::State& state, kernels::Exec exec) {
    for (auto _ : state) benchmark::DoNotOptimize(derived_chain_witness(2, {}, exec));
}

void BM_DerivedSeries(benchmark::State& state, kernels::Exec exec) {
    const auto gens = generators(Subalgebra::un, 3, 2);
    const auto closure = lie_closure(3, gens);
    for (auto _ : state) benchmark::DoNotOptimize(derived_series(closure.basis, 10, exec));
}

}  // namespace

BENCHMARK_CAPTURE(BM_BracketPairs, serial, kernels::Exec::serial)->Args({2, 40})->Args({3, 80})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BracketPairs, parallel, kernels::Exec::parallel)->Args({2, 40})->Args({3, 80})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Witness, serial, kernels::Exec::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Witness, parallel, kernels::Exec::parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_DerivedSeries, serial, kernels::Exec::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_DerivedSeries, parallel, kernels::Exec::parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
