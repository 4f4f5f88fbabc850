// Serial reference vs OpenMP fan-out for the seeded law suites.
#include <benchmark/benchmark.h>

#include "cbtree/plugged.hpp"
#include "cbtree/suites.hpp"

using namespace cbtree;

namespace {

template <SuiteReport (*Run)(const SuiteConfig &)>
void suite(benchmark::State &state) {
    SuiteConfig config;
    config.count = static_cast<std::size_t>(state.range(0));
    config.execution = state.range(1) ? Execution::Parallel : Execution::Serial;
    for (auto _ : state) {
        auto report = Run(config);
        benchmark::DoNotOptimize(report.results.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void plugged_rank(benchmark::State &state) {
    for (auto _ : state) {
        // fresh instance each time so the component cache starts cold
        auto g = growing_tree();
        benchmark::DoNotOptimize(rank_plugged(g, static_cast<std::size_t>(state.range(0))));
    }
}

} // namespace

BENCHMARK(suite<run_word_suite>)->ArgsProduct({{500}, {0, 1}})->ArgNames({"seeds", "parallel"});
BENCHMARK(suite<run_tree_suite>)->ArgsProduct({{50}, {0, 1}})->ArgNames({"seeds", "parallel"})->Unit(benchmark::kMillisecond);
BENCHMARK(suite<run_derivative_suite>)->ArgsProduct({{200}, {0, 1}})->ArgNames({"seeds", "parallel"})->Unit(benchmark::kMillisecond);
BENCHMARK(suite<run_prune_suite>)->ArgsProduct({{200}, {0, 1}})->ArgNames({"seeds", "parallel"})->Unit(benchmark::kMillisecond);
BENCHMARK(plugged_rank)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
