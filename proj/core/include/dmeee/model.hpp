#pragma once

#include "dmeee/types.hpp"

namespace dmeee {

/// Poisson closed-form quantities for one operating point, all in seconds or
/// dimensionless fractions. phi is mean power drawn relative to an interface
/// that never sleeps.
struct ModelBreakdown {
  double e_tf = 0.0;    // mean Fast-Wake residence per cycle
  double e_td = 0.0;    // mean Deep-Sleep residence per cycle
  double e_ttr = 0.0;   // mean transition time per cycle
  double p_deep = 0.0;  // probability a cycle reaches Deep-Sleep
  double rho = 0.0;     // utilization lambda/mu
  double rho_f = 0.0;   // long-run fraction of time in Fast-Wake
  double rho_d = 0.0;   // long-run fraction of time in Deep-Sleep
  double phi = 1.0;     // normalized energy consumption
};

/// Probability that fewer than q_fast frames arrive within t_atof + t_idle of
/// the buffer emptying, i.e. that the cycle transitions to Deep-Sleep.
double p_deep(const PhyProfile& profile, const CoalescingConfig& cfg, double lambda);

/// Mean Fast-Wake residence per cycle; always within [0, t_idle].
double expected_fast_wake(const PhyProfile& profile, const CoalescingConfig& cfg,
                          double lambda);

/// Mean Deep-Sleep residence per cycle (zero contribution from cycles that
/// wake directly from Fast-Wake).
double expected_deep_sleep(const PhyProfile& profile, const CoalescingConfig& cfg,
                           double lambda);

/// Mean time per cycle spent in transitions, given the Deep-Sleep probability.
double expected_transition(const PhyProfile& profile, double p_deep);

/// Full analytical evaluation for Poisson traffic. The max_dwell cap is not
/// part of the analytical model and is ignored here. Throws std::domain_error
/// for lambda <= 0 and std::invalid_argument (instability) for rho >= 1.
ModelBreakdown energy_ratio(const PhyProfile& profile, const CoalescingConfig& cfg,
                            const TrafficSpec& traffic);

}  // namespace dmeee
