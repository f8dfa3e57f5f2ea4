#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "dnacode/dnacode.hpp"

namespace {

using namespace dnacode;

const char* const kCodes[] = {"dna-7-4", "dna-6-3"};

std::vector<DnaWord> random_words(std::size_t count, std::size_t length, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<DnaWord> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<Base> bases(length);
        for (auto& b : bases) b = kAllBases[rng() & 3];
        out.emplace_back(std::move(bases));
    }
    return out;
}

void BM_Encode(benchmark::State& state) {
    const auto code = builtin_code(kCodes[state.range(0)]);
    const auto words = random_words(1024, code.k(), 1);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(encode(code, words[i++ & 1023]));
    state.SetLabel(kCodes[state.range(0)]);
}
BENCHMARK(BM_Encode)->DenseRange(0, 1);

void BM_Syndrome(benchmark::State& state) {
    const auto code = builtin_code(kCodes[state.range(0)]);
    const auto words = random_words(1024, code.n(), 2);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(syndrome(code, words[i++ & 1023]));
    state.SetLabel(kCodes[state.range(0)]);
}
BENCHMARK(BM_Syndrome)->DenseRange(0, 1);

void BM_Decode(benchmark::State& state) {
    const auto code = builtin_code(kCodes[state.range(0)]);
    const auto table = build_table(code, 1);
    const auto words = random_words(1024, code.n(), 3);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(try_decode(code, table, words[i++ & 1023]));
    state.SetLabel(kCodes[state.range(0)]);
}
BENCHMARK(BM_Decode)->DenseRange(0, 1);

void BM_BuildTable(benchmark::State& state) {
    const auto code = builtin_code("dna-7-4");
    for (auto _ : state) benchmark::DoNotOptimize(build_table(code, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_BuildTable)->Arg(1)->Arg(2)->Arg(3);

void BM_MinDistance(benchmark::State& state) {
    const auto code = builtin_code(kCodes[state.range(0)]);
    for (auto _ : state) benchmark::DoNotOptimize(min_distance(code));
    state.SetLabel(kCodes[state.range(0)]);
}
BENCHMARK(BM_MinDistance)->DenseRange(0, 1)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
