#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "dmeee/types.hpp"

namespace dmeee {

/// Caller-supplied interarrival process for one coalescing cycle: draw_empty
/// yields the empty period T_e (buffer drained until first arrival),
/// draw_gap yields each subsequent interarrival. Samples must be >= 0 and
/// have finite mean. For Poisson traffic both are exponential(lambda).
struct InterarrivalSampler {
  std::function<double(std::mt19937_64&)> draw_empty;
  std::function<double(std::mt19937_64&)> draw_gap;

  static InterarrivalSampler exponential(double lambda);
  static InterarrivalSampler deterministic(double gap, double first_offset = 0.0);
  static InterarrivalSampler uniform(double lo, double hi);
};

/// Monte-Carlo estimates of the per-cycle quantities with plain sample
/// standard errors (zero when n_cycles < 2). e_td averages over all cycles,
/// counting zero for cycles that never reach Deep-Sleep.
struct OracleEstimate {
  double p_deep_hat = 0.0;
  double p_deep_se = 0.0;
  double e_tf_hat = 0.0;
  double e_tf_se = 0.0;
  double e_td_hat = 0.0;
  double e_td_se = 0.0;
  std::uint64_t n_cycles = 0;
  std::uint64_t rng_seed = 0;
};

/// Simulates n_cycles independent coalescing cycles directly from the renewal
/// structure: per cycle the Fast-Wake time is
/// clamp(min(t_Qf, t_atof + t_idle) - t_atof, 0, t_idle), Deep-Sleep is
/// entered iff fewer than q_fast arrivals occur within t_atof + t_idle, and
/// then lasts max(t_Qd - (t_atof + t_idle) - t_ftod, 0) with the arrival
/// sequence continuing across the transition. Bit-for-bit reproducible from
/// the seed.
OracleEstimate estimate_cycle_quantities(const PhyProfile& profile,
                                         const CoalescingConfig& cfg,
                                         const InterarrivalSampler& sampler,
                                         std::uint64_t n_cycles, std::uint64_t seed);

}  // namespace dmeee
