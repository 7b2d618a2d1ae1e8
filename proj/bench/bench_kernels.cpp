#include <benchmark/benchmark.h>

#include "twostate/classical.hpp"
#include "twostate/ensemble.hpp"
#include "twostate/figures.hpp"
#include "twostate/protocol_sim.hpp"

namespace {

using twostate::Execution;

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::kSerial : Execution::kParallel;
}

void BM_TelecloningSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(twostate::telecloning_sweep(31, mode(state)));
}

void BM_ChannelSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(twostate::channel_sweep(twostate::kPi / 4, 101, mode(state)));
}

void BM_ClassicalSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(twostate::classical_sweep(181, mode(state)));
}

void BM_UnknownStateMonteCarlo(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(twostate::unknown_state_classical_fidelity(
        200'000, twostate::RngSeed{}, twostate::InputDistribution::kHaar, mode(state)));
  }
}

void BM_HaarProtocolMonteCarlo(benchmark::State& state) {
  const auto spec = twostate::standard_teleportation(twostate::Channel::from_alpha_sq(0.3).state());
  for (auto _ : state)
    benchmark::DoNotOptimize(twostate::mc_haar_protocol_fidelity(spec, 20'000, twostate::RngSeed{}, mode(state)));
}

}  // namespace

// Argument 0 runs the serial reference path, 1 the OpenMP path.
BENCHMARK(BM_TelecloningSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChannelSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassicalSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_UnknownStateMonteCarlo)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HaarProtocolMonteCarlo)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
