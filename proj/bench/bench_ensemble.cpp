// Serial reference loops against the OpenMP ensemble kernels, plus the
// single-configuration stage kernel against the map-based reference.

#include <benchmark/benchmark.h>

#include "amech/dynamics.hpp"
#include "amech/ensemble.hpp"
#include "amech/fixtures.hpp"
#include "amech/random.hpp"

namespace {

std::vector<amech::Configuration> make_ensemble(std::size_t n) {
  amech::Rng rng(1);
  std::vector<amech::Configuration> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(amech::random_configuration(19, 81, rng));
  return out;
}

void BM_StageSortedRuns(benchmark::State& state) {
  auto c = amech::fixture("a0");
  for (auto _ : state) {
    amech::apply_stage(c);
    benchmark::DoNotOptimize(c.particles().data());
  }
}
BENCHMARK(BM_StageSortedRuns);

void BM_StageReference(benchmark::State& state) {
  auto c = amech::fixture("a0");
  for (auto _ : state) {
    c = amech::reference::stage(std::move(c));
    benchmark::DoNotOptimize(c.particles().data());
  }
}
BENCHMARK(BM_StageReference);

void BM_AdvanceEnsembleSerial(benchmark::State& state) {
  const auto ensemble = make_ensemble(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto out = amech::advance_ensemble_serial(ensemble, 10);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * 10);
}
BENCHMARK(BM_AdvanceEnsembleSerial)->Arg(16)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_AdvanceEnsembleParallel(benchmark::State& state) {
  const auto ensemble = make_ensemble(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto out = amech::advance_ensemble(ensemble, 10);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * 10);
  state.counters["threads"] = amech::ensemble_threads();
}
BENCHMARK(BM_AdvanceEnsembleParallel)->Arg(16)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_RoundtripSerial(benchmark::State& state) {
  const auto ensemble = make_ensemble(64);
  for (auto _ : state) benchmark::DoNotOptimize(amech::roundtrip_ensemble_serial(ensemble, 10));
}
BENCHMARK(BM_RoundtripSerial)->Unit(benchmark::kMillisecond);

void BM_RoundtripParallel(benchmark::State& state) {
  const auto ensemble = make_ensemble(64);
  for (auto _ : state) benchmark::DoNotOptimize(amech::roundtrip_ensemble(ensemble, 10));
}
BENCHMARK(BM_RoundtripParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
