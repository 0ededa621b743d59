#include "dmeee/types.hpp"

#include <cmath>
#include <stdexcept>

namespace dmeee {

PhyProfile PhyProfile::default_40g() {
  PhyProfile p;
  p.t_atof = 0.90e-6;
  p.t_ftoa = 0.34e-6;
  p.t_ftod = 1.00e-6;
  p.t_dtoa = 5.50e-6;
  p.t_idle = 3.50e-6;
  p.line_rate = 40e9;
  p.phi_fast = 0.7;
  p.phi_deep = 0.1;
  return p;
}

void PhyProfile::validate() const {
  auto finite_nonneg = [](double v) { return std::isfinite(v) && v >= 0.0; };
  if (!finite_nonneg(t_atof) || !finite_nonneg(t_ftoa) || !finite_nonneg(t_ftod) ||
      !finite_nonneg(t_dtoa) || !finite_nonneg(t_idle)) {
    throw std::invalid_argument("PhyProfile: transition times and idle timer must be >= 0");
  }
  if (!std::isfinite(line_rate) || line_rate <= 0.0) {
    throw std::invalid_argument("PhyProfile: line_rate must be > 0");
  }
  if (!(phi_deep >= 0.0 && phi_deep <= phi_fast && phi_fast <= 1.0)) {
    throw std::invalid_argument("PhyProfile: need 0 <= phi_deep <= phi_fast <= 1");
  }
}

void CoalescingConfig::validate() const {
  if (q_fast < 1) {
    throw std::invalid_argument("CoalescingConfig: q_fast must be >= 1");
  }
  if (q_fast > q_deep) {
    throw std::invalid_argument("CoalescingConfig: Q_f <= Q_d required");
  }
  if (max_dwell && !(std::isfinite(*max_dwell) && *max_dwell > 0.0)) {
    throw std::invalid_argument("CoalescingConfig: max_dwell must be > 0 when set");
  }
}

TrafficSpec TrafficSpec::poisson(double lambda, double frame_bytes) {
  TrafficSpec s;
  s.kind = Kind::poisson;
  s.lambda = lambda;
  s.frame_bytes = frame_bytes;
  return s;
}

TrafficSpec TrafficSpec::from_trace(TraceHandle records, double scale) {
  TrafficSpec s;
  s.kind = Kind::trace;
  s.trace = std::move(records);
  s.trace_scale = scale;
  return s;
}

void TrafficSpec::validate() const {
  switch (kind) {
    case Kind::poisson:
      if (!std::isfinite(lambda) || lambda <= 0.0) {
        throw std::invalid_argument("TrafficSpec: Poisson lambda must be > 0");
      }
      if (!std::isfinite(frame_bytes) || frame_bytes <= 0.0) {
        throw std::invalid_argument("TrafficSpec: frame_bytes must be > 0");
      }
      break;
    case Kind::trace:
      if (!trace) {
        throw std::invalid_argument("TrafficSpec: trace handle is null");
      }
      if (!std::isfinite(trace_scale) || trace_scale <= 0.0) {
        throw std::invalid_argument("TrafficSpec: trace_scale must be > 0");
      }
      break;
  }
}

}  // namespace dmeee
