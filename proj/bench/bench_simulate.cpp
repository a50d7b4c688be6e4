// Serial reference simulator vs the OpenMP kernels on synthesized netlists.
#include <benchmark/benchmark.h>

#include "revsynth/fredkin_synth.hpp"
#include "revsynth/simulate.hpp"
#include "revsynth/toffoli_synth.hpp"

namespace {

using namespace revsynth;

const Circuit& general_circuit(unsigned n) {
  static std::vector<Circuit> cache(8, Circuit(0));
  if (cache[n].width() == 0) {
    cache[n] = synth_general(sample_permutation(n, PermKind::any, 7));
  }
  return cache[n];
}

void BM_VerifyReference(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const Circuit& c = general_circuit(n);
  const Permutation p = sample_permutation(n, PermKind::any, 7);
  for (auto _ : state) benchmark::DoNotOptimize(verify_realizes_reference(c, p).pass);
  state.counters["gates"] = static_cast<double>(c.gates().size());
}

void BM_VerifyParallel(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const Circuit& c = general_circuit(n);
  const Permutation p = sample_permutation(n, PermKind::any, 7);
  for (auto _ : state) benchmark::DoNotOptimize(verify_realizes(c, p).pass);
  state.counters["gates"] = static_cast<double>(c.gates().size());
}

void BM_TableReference(benchmark::State& state) {
  const Circuit c = synth_ckswap(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(circuit_to_permutation_reference(c));
}

void BM_TableParallel(benchmark::State& state) {
  const Circuit c = synth_ckswap(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(circuit_to_permutation(c));
}

}  // namespace

BENCHMARK(BM_VerifyReference)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableReference)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableParallel)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
