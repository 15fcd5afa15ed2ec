// SPDX-License-Identifier: Apache-2.0
//
// Serial vs OpenMP word scans over the bounded-language predicates the
// acceptance checks lean on.

#include <benchmark/benchmark.h>

#include "mhfa/builders.hpp"
#include "mhfa/engine.hpp"
#include "mhfa/pcfa.hpp"
#include "mhfa/wordscan.hpp"

using namespace mhfa;

namespace {

const pcfa::System& fixture() {
    static pcfa::System sys = pcfa::builtinFixture();
    return sys;
}

WordPredicate systemPredicate() {
    return [](const Word& w) { return pcfa::acceptsSystem(fixture(), w); };
}

const MultiHeadAutomaton& lnThree() {
    static MultiHeadAutomaton m = build::buildLnAcceptor(3);
    return m;
}

WordPredicate lnPredicate() {
    return [](const Word& w) { return accepts(lnThree(), w); };
}

} // namespace

static void BM_SystemScanSerial(benchmark::State& state) {
    auto pred = systemPredicate();
    for (auto _ : state)
        benchmark::DoNotOptimize(scanWords(fixture().alphabet, state.range(0), pred));
}
BENCHMARK(BM_SystemScanSerial)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_SystemScanParallel(benchmark::State& state) {
    auto pred = systemPredicate();
    for (auto _ : state)
        benchmark::DoNotOptimize(
            scanWordsParallel(fixture().alphabet, state.range(0), pred));
}
BENCHMARK(BM_SystemScanParallel)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_AcceptorScanSerial(benchmark::State& state) {
    auto pred = lnPredicate();
    for (auto _ : state)
        benchmark::DoNotOptimize(scanWords(lnThree().alphabet, state.range(0), pred));
}
BENCHMARK(BM_AcceptorScanSerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_AcceptorScanParallel(benchmark::State& state) {
    auto pred = lnPredicate();
    for (auto _ : state)
        benchmark::DoNotOptimize(scanWordsParallel(lnThree().alphabet, state.range(0), pred));
}
BENCHMARK(BM_AcceptorScanParallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
