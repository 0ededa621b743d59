#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace dmeee {

/// Physical-layer constants of a dual-mode PHY. All times are in seconds,
/// the line rate in bits per second. phi_fast/phi_deep are the power drawn
/// in each low-power mode as a fraction of active power.
struct PhyProfile {
  double t_atof = 0.0;   // active -> fast-wake transition
  double t_ftoa = 0.0;   // fast-wake -> active transition
  double t_ftod = 0.0;   // fast-wake -> deep-sleep transition
  double t_dtoa = 0.0;   // deep-sleep -> active transition
  double t_idle = 0.0;   // fast-wake residence timer
  double line_rate = 0.0;
  double phi_fast = 1.0;
  double phi_deep = 1.0;

  /// Reference 40 Gb/s profile used throughout the tests and as the CLI
  /// default: 0.90/0.34/1.00/5.50 us transitions, 3.50 us idle timer,
  /// phi_f = 0.7, phi_d = 0.1.
  static PhyProfile default_40g();

  double service_time(double frame_bytes) const {
    return frame_bytes * 8.0 / line_rate;
  }

  /// Throws std::invalid_argument on negative durations, non-positive
  /// line rate, or an efficiency profile outside 0 <= phi_d <= phi_f <= 1.
  void validate() const;
};

/// Frame-coalescing thresholds. q_fast frames wake the PHY from Fast-Wake,
/// q_deep frames wake it from Deep-Sleep; q_fast <= q_deep. max_dwell, when
/// set, caps the time the oldest buffered frame may wait while the PHY is
/// in a low-power state.
struct CoalescingConfig {
  std::uint32_t q_fast = 1;
  std::uint32_t q_deep = 1;
  std::optional<double> max_dwell;  // seconds

  void validate() const;
};

/// One arrival in a replayable trace. Timestamps are seconds relative to
/// trace start, non-decreasing; sizes are 1..65535 bytes.
struct TraceRecord {
  double timestamp = 0.0;
  std::uint32_t size_bytes = 0;
};

using TraceHandle = std::shared_ptr<const std::vector<TraceRecord>>;

/// Arrival-process description consumed by the model and the simulator.
struct TrafficSpec {
  enum class Kind { poisson, trace };

  Kind kind = Kind::poisson;
  double lambda = 0.0;        // frames/s, Poisson only
  double frame_bytes = 1500;  // fixed frame size, Poisson only
  TraceHandle trace;          // trace only
  double trace_scale = 1.0;   // timestamp multiplier for replay

  static TrafficSpec poisson(double lambda, double frame_bytes = 1500);
  static TrafficSpec from_trace(TraceHandle records, double scale = 1.0);

  void validate() const;
};

}  // namespace dmeee
