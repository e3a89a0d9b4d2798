#include <benchmark/benchmark.h>

#include "delaysynth/determinize.hpp"
#include "delaysynth/profiles.hpp"
#include "delaysynth/sampling.hpp"
#include "delaysynth/spec_io.hpp"
#include "delaysynth/synth.hpp"

using namespace ds;

namespace {

Transducer fixture(const char* name) {
  return parseSpecFile(std::string(DS_FIXTURE_DIR) + "/" + name + ".spec");
}

void BM_ProfileAutomaton(benchmark::State& state, const char* name) {
  Transducer t = normalize(fixture(name));
  for (auto _ : state) benchmark::DoNotOptimize(buildProfileAutomaton(t));
}

void BM_Determinize(benchmark::State& state, const char* name) {
  auto npa = projectInput(normalize(fixture(name)));
  for (auto _ : state) benchmark::DoNotOptimize(determinize(npa));
}

void BM_Synthesize(benchmark::State& state, const char* name) {
  Transducer t = fixture(name);
  for (auto _ : state) benchmark::DoNotOptimize(synthesize(t));
}

void BM_Executor(benchmark::State& state) {
  Transducer spec = fixture("r1");
  auto rep = synthesize(spec);
  Transducer t = normalize(spec);
  Lasso input = parseLasso("abbaA|ab");
  for (auto _ : state)
    benchmark::DoNotOptimize(
        runExecutor(t, *rep.arenaData, *rep.strategy, input));
}

void BM_PairAcceptance(benchmark::State& state) {
  Transducer t = fixture("r1");
  PairLasso p{{"abA", "b"}, {"Aab", "a"}};
  for (auto _ : state) benchmark::DoNotOptimize(pairLassoAcceptance(t, p));
}

}  // namespace

BENCHMARK_CAPTURE(BM_ProfileAutomaton, r1, "r1");
BENCHMARK_CAPTURE(BM_ProfileAutomaton, f2, "f2");
BENCHMARK_CAPTURE(BM_Determinize, r1, "r1");
BENCHMARK_CAPTURE(BM_Determinize, f2, "f2");
BENCHMARK_CAPTURE(BM_Synthesize, r1, "r1");
BENCHMARK_CAPTURE(BM_Synthesize, f1, "f1");
BENCHMARK_CAPTURE(BM_Synthesize, fivestate, "fivestate");
BENCHMARK(BM_Executor);
BENCHMARK(BM_PairAcceptance);

BENCHMARK_MAIN();
