#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "dnacode/dnacode.hpp"

namespace {

using namespace dnacode;

void BM_RunExperiment(benchmark::State& state) {
    const auto code = builtin_code("dna-7-4");
    const auto table = build_table(code, 1);
    const auto model = ErrorModel::per_base_rate(0.05);
    const auto threads = static_cast<unsigned>(state.range(0));
    constexpr std::uint64_t kTrials = 10000;
    for (auto _ : state) benchmark::DoNotOptimize(run_experiment(code, table, model, kTrials, 99, threads));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * kTrials));
}
BENCHMARK(BM_RunExperiment)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_MessageRoundTrip(benchmark::State& state) {
    const auto code = builtin_code("dna-7-4");
    const auto table = build_table(code, 1);
    std::vector<std::uint8_t> data(static_cast<std::size_t>(state.range(0)));
    for (std::size_t i = 0; i < data.size(); ++i) data[i] = static_cast<std::uint8_t>(i * 131 + 7);
    for (auto _ : state) {
        const auto msg = message_encode(code, data, "dna-7-4");
        benchmark::DoNotOptimize(message_decode(code, table, msg));
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * data.size()));
}
BENCHMARK(BM_MessageRoundTrip)->Arg(64)->Arg(4096);

}  // namespace
