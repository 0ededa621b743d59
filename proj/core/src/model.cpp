#include "dmeee/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dmeee/gamma.hpp"

namespace dmeee {
namespace {

void check_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::domain_error("model: lambda must be > 0");
  }
}

// R(q, a) - R(q, b) for a <= b. Switches to the complementary tails when both
// head sums sit near 1 so the difference keeps full relative precision.
double upper_gamma_diff(int q, double a, double b) {
  if (b <= static_cast<double>(q)) {
    return poisson_tail(q, b) - poisson_tail(q, a);
  }
  return regularized_upper_gamma(q, a) - regularized_upper_gamma(q, b);
}

}  // namespace

double p_deep(const PhyProfile& profile, const CoalescingConfig& cfg, double lambda) {
  check_lambda(lambda);
  const double window = profile.t_atof + profile.t_idle;
  return regularized_upper_gamma(static_cast<int>(cfg.q_fast), lambda * window);
}

double expected_fast_wake(const PhyProfile& profile, const CoalescingConfig& cfg,
                          double lambda) {
  check_lambda(lambda);
  const int qf = static_cast<int>(cfg.q_fast);
  const double a = lambda * profile.t_atof;
  const double b = lambda * (profile.t_atof + profile.t_idle);
  const double pd = regularized_upper_gamma(qf, b);

  double e_tf = qf * upper_gamma_diff(qf + 1, a, b) / lambda -
                profile.t_atof * regularized_upper_gamma(qf, a) +
                (profile.t_atof + profile.t_idle) * pd;

  // The result is confined to [0, t_idle]; anything beyond rounding noise
  // would be a formula error.
  const double slack = 1e-9 * std::max(profile.t_idle, 1e-12);
  if (e_tf < -slack || e_tf > profile.t_idle + slack) {
    throw std::logic_error("expected_fast_wake: result outside [0, t_idle]");
  }
  return std::clamp(e_tf, 0.0, profile.t_idle);
}

double expected_deep_sleep(const PhyProfile& profile, const CoalescingConfig& cfg,
                           double lambda) {
  check_lambda(lambda);
  const int qf = static_cast<int>(cfg.q_fast);
  const int qd = static_cast<int>(cfg.q_deep);
  const double window_x = lambda * (profile.t_atof + profile.t_idle);
  const double x_ftod = lambda * profile.t_ftod;

  double sum = 0.0;
  for (int i = 0; i < qf; ++i) {
    const double weight = poisson_pmf(i, window_x);
    if (weight == 0.0) {
      continue;
    }
    const int m = qd - i;  // frames still missing when the timer expires
    const double residual = m * regularized_upper_gamma(m + 1, x_ftod) / lambda -
                            profile.t_ftod * regularized_upper_gamma(m, x_ftod);
    sum += weight * std::max(residual, 0.0);
  }
  return sum;
}

double expected_transition(const PhyProfile& profile, double p_deep) {
  if (!(p_deep >= 0.0 && p_deep <= 1.0)) {
    throw std::domain_error("expected_transition: p_deep must be in [0, 1]");
  }
  return profile.t_atof + (profile.t_ftod + profile.t_dtoa) * p_deep +
         profile.t_ftoa * (1.0 - p_deep);
}

ModelBreakdown energy_ratio(const PhyProfile& profile, const CoalescingConfig& cfg,
                            const TrafficSpec& traffic) {
  profile.validate();
  cfg.validate();
  if (traffic.kind != TrafficSpec::Kind::poisson) {
    throw std::invalid_argument("energy_ratio: analytical model requires Poisson traffic");
  }
  traffic.validate();

  const double lambda = traffic.lambda;
  const double rho = lambda * profile.service_time(traffic.frame_bytes);
  if (rho >= 1.0) {
    throw std::invalid_argument("energy_ratio: utilization rho >= 1, system unstable");
  }

  ModelBreakdown out;
  out.rho = rho;
  out.p_deep = p_deep(profile, cfg, lambda);
  out.e_tf = expected_fast_wake(profile, cfg, lambda);
  out.e_td = expected_deep_sleep(profile, cfg, lambda);
  out.e_ttr = expected_transition(profile, out.p_deep);

  const double inactive = out.e_tf + out.e_td + out.e_ttr;
  out.rho_f = (1.0 - rho) * out.e_tf / inactive;
  out.rho_d = (1.0 - rho) * out.e_td / inactive;
  out.phi = 1.0 - (1.0 - profile.phi_fast) * out.rho_f -
            (1.0 - profile.phi_deep) * out.rho_d;
  return out;
}

}  // namespace dmeee
