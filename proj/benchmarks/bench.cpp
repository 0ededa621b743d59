#include <benchmark/benchmark.h>

#include "dmeee/gamma.hpp"
#include "dmeee/model.hpp"
#include "dmeee/oracle.hpp"
#include "dmeee/simulator.hpp"
#include "dmeee/traffic.hpp"

using namespace dmeee;

namespace {

const PhyProfile kProfile = PhyProfile::default_40g();

void BM_RegularizedGamma(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(regularized_upper_gamma(q, x));
    x = x < 100.0 ? x + 0.1 : 0.1;
  }
}
BENCHMARK(BM_RegularizedGamma)->Arg(1)->Arg(8)->Arg(128);

void BM_EnergyRatio(benchmark::State& state) {
  const CoalescingConfig cfg{8, 32, {}};
  const TrafficSpec traffic = TrafficSpec::poisson(load_to_lambda(10e9, 1500.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(energy_ratio(kProfile, cfg, traffic));
  }
}
BENCHMARK(BM_EnergyRatio);

void BM_SimulatePoisson(benchmark::State& state) {
  const double load_gbps = static_cast<double>(state.range(0));
  const CoalescingConfig cfg{2, 8, {}};
  const TrafficSpec traffic = TrafficSpec::poisson(load_to_lambda(load_gbps * 1e9, 1500.0));
  const double horizon = 5e-3;
  std::uint64_t seed = 1;
  std::uint64_t frames = 0;
  for (auto _ : state) {
    const SimReport r = simulate(kProfile, cfg, traffic, horizon, seed++);
    frames += r.frames_in;
    benchmark::DoNotOptimize(r.phi_sim);
  }
  state.SetItemsProcessed(static_cast<int64_t>(frames));
}
BENCHMARK(BM_SimulatePoisson)->Arg(2)->Arg(38)->Unit(benchmark::kMillisecond);

void BM_OracleCycles(benchmark::State& state) {
  const CoalescingConfig cfg{2, 8, {}};
  const auto sampler = InterarrivalSampler::exponential(1e6);
  std::uint64_t seed = 1;
  std::uint64_t cycles = 0;
  for (auto _ : state) {
    const auto est = estimate_cycle_quantities(kProfile, cfg, sampler, 10'000, seed++);
    cycles += est.n_cycles;
    benchmark::DoNotOptimize(est.e_td_hat);
  }
  state.SetItemsProcessed(static_cast<int64_t>(cycles));
}
BENCHMARK(BM_OracleCycles)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
