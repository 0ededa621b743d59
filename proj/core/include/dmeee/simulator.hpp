#pragma once

#include <cstdint>
#include <vector>

#include "dmeee/types.hpp"

namespace dmeee {

/// PHY state machine. One coalescing cycle follows
/// Active -> AtoF -> FastWake -> (FtoA | FtoD -> DeepSleep -> DtoA) -> Active,
/// where the FastWake and DeepSleep visits may have zero length when the wake
/// threshold is already met at transition completion.
enum class PhyState { Active, AtoF, FastWake, FtoD, DeepSleep, FtoA, DtoA };

const char* to_string(PhyState s);

struct Frame {
  double arrival_time = 0.0;
  double size_bytes = 0.0;
  double service_start = 0.0;
  double departure = 0.0;
};

struct StateInterval {
  PhyState state;
  double begin = 0.0;
  double end = 0.0;
  std::uint64_t cycle = 0;
};

/// Per-cycle time accounting; a cycle runs from one sleep entry (queue
/// drained) to the next. The final cycle of a run may be truncated by the
/// horizon.
struct CycleBreakdown {
  std::uint64_t index = 0;
  double start = 0.0;
  double end = 0.0;
  double t_fast = 0.0;
  double t_deep = 0.0;
  double t_transition = 0.0;
  double t_busy = 0.0;
  bool entered_deep = false;
  std::uint64_t frames_served = 0;
};

struct SimOptions {
  bool record_cycles = false;
  bool record_timeline = false;
  bool record_frames = false;
};

struct SimReport {
  // The four buckets partition [0, horizon] exactly.
  double t_active_busy = 0.0;
  double t_fast = 0.0;
  double t_deep = 0.0;
  double t_transition = 0.0;
  double t_total = 0.0;

  double phi_sim = 0.0;
  double mean_queue_delay = 0.0;  // arrival -> service start, departed frames
  double max_queue_delay = 0.0;

  std::uint64_t frames_in = 0;
  std::uint64_t frames_out = 0;
  std::uint64_t frames_remaining = 0;  // still queued or in service at the horizon
  std::uint64_t cycles = 0;        // sleep entries, including a truncated last one
  std::uint64_t deep_entries = 0;  // cycles that left FastWake towards Deep-Sleep
  std::uint64_t wake_decisions = 0;
  double p_deep_observed = 0.0;    // deep_entries / wake_decisions
  std::uint64_t max_queue_len = 0; // waiting frames, excludes the one in service

  std::vector<CycleBreakdown> cycle_log;  // SimOptions::record_cycles
  std::vector<StateInterval> timeline;    // SimOptions::record_timeline
  std::vector<Frame> frame_log;           // SimOptions::record_frames, departed frames
};

/// Event-driven run of the dual-mode PHY over [0, horizon). The run starts at
/// a cycle boundary (Active, empty queue) and puts the PHY to sleep at t = 0.
/// Events at t >= horizon are not processed; the state in force at the end
/// accrues up to the horizon. Deterministic for a fixed (profile, cfg,
/// traffic, horizon, seed).
SimReport simulate(const PhyProfile& profile, const CoalescingConfig& cfg,
                   const TrafficSpec& traffic, double horizon, std::uint64_t seed,
                   const SimOptions& options = {});

}  // namespace dmeee
