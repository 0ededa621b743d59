#include "dmeee/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dmeee {
namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Running mean/variance (Welford).
struct Accumulator {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++n;
    const double d = x - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (x - mean);
  }

  double standard_error() const {
    if (n < 2) {
      return 0.0;
    }
    const double var = m2 / static_cast<double>(n - 1);
    return std::sqrt(var / static_cast<double>(n));
  }
};

}  // namespace

InterarrivalSampler InterarrivalSampler::exponential(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("InterarrivalSampler::exponential: lambda must be > 0");
  }
  auto draw = [lambda](std::mt19937_64& rng) {
    return -std::log1p(-uniform01(rng)) / lambda;
  };
  return InterarrivalSampler{draw, draw};
}

InterarrivalSampler InterarrivalSampler::deterministic(double gap, double first_offset) {
  if (!(gap >= 0.0) || !(first_offset >= 0.0)) {
    throw std::invalid_argument("InterarrivalSampler::deterministic: samples must be >= 0");
  }
  return InterarrivalSampler{[first_offset](std::mt19937_64&) { return first_offset; },
                             [gap](std::mt19937_64&) { return gap; }};
}

InterarrivalSampler InterarrivalSampler::uniform(double lo, double hi) {
  if (!(0.0 <= lo && lo <= hi) || !std::isfinite(hi)) {
    throw std::invalid_argument("InterarrivalSampler::uniform: need 0 <= lo <= hi");
  }
  auto draw = [lo, hi](std::mt19937_64& rng) { return lo + (hi - lo) * uniform01(rng); };
  return InterarrivalSampler{draw, draw};
}

OracleEstimate estimate_cycle_quantities(const PhyProfile& profile,
                                         const CoalescingConfig& cfg,
                                         const InterarrivalSampler& sampler,
                                         std::uint64_t n_cycles, std::uint64_t seed) {
  profile.validate();
  cfg.validate();
  if (n_cycles < 1) {
    throw std::invalid_argument("estimate_cycle_quantities: n_cycles must be >= 1");
  }
  if (!sampler.draw_empty || !sampler.draw_gap) {
    throw std::invalid_argument("estimate_cycle_quantities: sampler not fully specified");
  }

  const double window = profile.t_atof + profile.t_idle;
  const std::uint32_t qf = cfg.q_fast;
  const std::uint32_t qd = cfg.q_deep;

  std::mt19937_64 rng(seed);
  Accumulator acc_p, acc_tf, acc_td;

  for (std::uint64_t c = 0; c < n_cycles; ++c) {
    double t = sampler.draw_empty(rng);  // first arrival of the cycle
    std::uint32_t k = 1;
    while (k < qf && t <= window) {
      t += sampler.draw_gap(rng);
      ++k;
    }

    if (t <= window) {
      // Q_f-th frame arrived before the idle timer; wake from Fast-Wake.
      acc_p.add(0.0);
      acc_tf.add(std::clamp(t - profile.t_atof, 0.0, profile.t_idle));
      acc_td.add(0.0);
      continue;
    }

    // Timer expired with k-1 (< q_fast) arrivals inside the window.
    acc_p.add(1.0);
    acc_tf.add(profile.t_idle);
    while (k < qd) {
      t += sampler.draw_gap(rng);
      ++k;
    }
    acc_td.add(std::max(t - window - profile.t_ftod, 0.0));
  }

  OracleEstimate est;
  est.p_deep_hat = acc_p.mean;
  est.p_deep_se = acc_p.standard_error();
  est.e_tf_hat = acc_tf.mean;
  est.e_tf_se = acc_tf.standard_error();
  est.e_td_hat = acc_td.mean;
  est.e_td_se = acc_td.standard_error();
  est.n_cycles = n_cycles;
  est.rng_seed = seed;
  return est;
}

}  // namespace dmeee
