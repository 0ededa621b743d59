#include "dmeee/simulator.hpp"

#include <cmath>
#include <deque>
#include <optional>
#include <stdexcept>

#include "dmeee/event_queue.hpp"
#include "dmeee/traffic.hpp"

namespace dmeee {
namespace {

enum class EventKind { Arrival, TransitionDone, IdleTimer, DwellTimer, Departure };

// Arrivals outrank timers at equal timestamps (wake wins); everything else is
// FIFO within the same instant.
constexpr int kArrivalPriority = 0;

class Simulator {
 public:
  Simulator(const PhyProfile& profile, const CoalescingConfig& cfg,
            const TrafficSpec& traffic, double horizon, std::uint64_t seed,
            const SimOptions& options)
      : profile_(profile),
        cfg_(cfg),
        horizon_(horizon),
        options_(options),
        source_(make_source(traffic, seed)) {
    profile_.validate();
    cfg_.validate();
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
      throw std::invalid_argument("simulate: horizon must be > 0");
    }
  }

  SimReport run() {
    enter_sleep(0.0);
    schedule_next_arrival();
    while (auto ev = events_.pop()) {
      if (ev->time >= horizon_) {
        break;
      }
      dispatch(ev->time, ev->payload);
    }
    finish();
    return std::move(report_);
  }

 private:
  using Queue = EventQueue<EventKind>;

  void dispatch(double t, EventKind kind) {
    switch (kind) {
      case EventKind::Arrival:
        on_arrival(t);
        break;
      case EventKind::TransitionDone:
        on_transition_done(t);
        break;
      case EventKind::IdleTimer:
        idle_timer_.reset();
        on_idle_timer(t);
        break;
      case EventKind::DwellTimer:
        dwell_timer_.reset();
        on_dwell_timer(t);
        break;
      case EventKind::Departure:
        on_departure(t);
        break;
    }
  }

  void on_arrival(double t) {
    ++report_.frames_in;
    queue_.push_back(Frame{t, pending_arrival_->size_bytes, 0.0, 0.0});
    if (queue_.size() > report_.max_queue_len) {
      report_.max_queue_len = queue_.size();
    }
    if (cfg_.max_dwell && queue_.size() == 1 && in_low_power_path()) {
      dwell_timer_ = events_.schedule(t + *cfg_.max_dwell, EventKind::DwellTimer);
    }
    switch (state_) {
      case PhyState::FastWake:
        if (queue_.size() >= cfg_.q_fast) {
          accrue(t);
          cancel_idle_timer();
          ++report_.wake_decisions;
          set_transition(PhyState::FtoA, t);
        }
        break;
      case PhyState::DeepSleep:
        if (queue_.size() >= cfg_.q_deep) {
          accrue(t);
          set_transition(PhyState::DtoA, t);
        }
        break;
      case PhyState::Active:
        if (!in_service_) {
          throw std::logic_error("sim: idle Active state with pending frames");
        }
        break;
      default:
        break;  // transitions are non-abortable; thresholds are re-checked on completion
    }
    schedule_next_arrival();
  }

  void on_transition_done(double t) {
    const PhyState completed = state_;
    accrue(t);
    switch (completed) {
      case PhyState::AtoF:
        if (dwell_expired_ || queue_.size() >= cfg_.q_fast) {
          visit_zero_length(PhyState::FastWake, t);
          ++report_.wake_decisions;
          set_transition(PhyState::FtoA, t);
        } else {
          state_ = PhyState::FastWake;
          idle_timer_ = events_.schedule(t + profile_.t_idle, EventKind::IdleTimer);
        }
        break;
      case PhyState::FtoD:
        if (dwell_expired_ || queue_.size() >= cfg_.q_deep) {
          visit_zero_length(PhyState::DeepSleep, t);
          set_transition(PhyState::DtoA, t);
        } else {
          state_ = PhyState::DeepSleep;
        }
        break;
      case PhyState::FtoA:
      case PhyState::DtoA:
        state_ = PhyState::Active;
        if (queue_.empty()) {
          throw std::logic_error("sim: woke up with an empty queue");
        }
        start_service(t);
        break;
      default:
        throw std::logic_error("sim: transition completion in a non-transition state");
    }
  }

  void on_idle_timer(double t) {
    if (state_ != PhyState::FastWake) {
      throw std::logic_error("sim: idle timer fired outside FastWake");
    }
    if (queue_.size() >= cfg_.q_fast) {
      throw std::logic_error("sim: idle timer fired with wake threshold met");
    }
    accrue(t);
    ++report_.wake_decisions;
    ++report_.deep_entries;
    current_cycle_.entered_deep = true;
    set_transition(PhyState::FtoD, t);
  }

  void on_dwell_timer(double t) {
    switch (state_) {
      case PhyState::FastWake:
        accrue(t);
        cancel_idle_timer();
        dwell_woke_ = true;
        ++report_.wake_decisions;
        set_transition(PhyState::FtoA, t);
        break;
      case PhyState::DeepSleep:
        accrue(t);
        dwell_woke_ = true;
        set_transition(PhyState::DtoA, t);
        break;
      case PhyState::AtoF:
      case PhyState::FtoD:
        dwell_expired_ = true;  // acted on when the transition completes
        break;
      default:
        throw std::logic_error("sim: dwell timer fired while awake");
    }
  }

  void on_departure(double t) {
    Frame done = *in_service_;
    done.departure = t;
    in_service_.reset();
    ++report_.frames_out;
    ++current_cycle_.frames_served;
    const double delay = done.service_start - done.arrival_time;
    delay_sum_ += delay;
    if (delay > report_.max_queue_delay) {
      report_.max_queue_delay = delay;
    }
    if (options_.record_frames) {
      report_.frame_log.push_back(done);
    }
    if (!queue_.empty()) {
      start_service(t);
    } else {
      enter_sleep(t);
    }
  }

  void start_service(double t) {
    Frame f = queue_.front();
    queue_.pop_front();
    f.service_start = t;
    in_service_ = f;
    events_.schedule(t + profile_.service_time(f.size_bytes), EventKind::Departure);
  }

  void enter_sleep(double t) {
    accrue(t);
    if (dwell_timer_) {
      throw std::logic_error("sim: dwell timer outstanding at sleep entry");
    }
    close_cycle(t);
    state_ = PhyState::AtoF;
    dwell_expired_ = false;
    dwell_woke_ = false;
    events_.schedule(t + profile_.t_atof, EventKind::TransitionDone);
  }

  // State switch into a transition; the caller has already closed the books
  // on the previous state.
  void set_transition(PhyState next, double t) {
    double duration = 0.0;
    switch (next) {
      case PhyState::FtoA: duration = profile_.t_ftoa; break;
      case PhyState::DtoA: duration = profile_.t_dtoa; break;
      case PhyState::FtoD: duration = profile_.t_ftod; break;
      default:
        throw std::logic_error("sim: set_transition on a non-transition state");
    }
    if (next == PhyState::FtoA || next == PhyState::DtoA) {
      const std::uint32_t threshold = next == PhyState::FtoA ? cfg_.q_fast : cfg_.q_deep;
      if (queue_.size() < threshold && !dwell_woke_ && !dwell_expired_) {
        throw std::logic_error("sim: wake transition without threshold or dwell cap");
      }
      if (dwell_timer_) {
        events_.cancel(*dwell_timer_);
        dwell_timer_.reset();
      }
    }
    state_ = next;
    events_.schedule(t + duration, EventKind::TransitionDone);
  }

  void cancel_idle_timer() {
    if (idle_timer_) {
      events_.cancel(*idle_timer_);
      idle_timer_.reset();
    }
  }

  // Close the books on the state occupied since state_entered_.
  void accrue(double t) {
    const double span = t - state_entered_;
    switch (state_) {
      case PhyState::Active:
        report_.t_active_busy += span;
        current_cycle_.t_busy += span;
        break;
      case PhyState::FastWake:
        report_.t_fast += span;
        current_cycle_.t_fast += span;
        break;
      case PhyState::DeepSleep:
        report_.t_deep += span;
        current_cycle_.t_deep += span;
        break;
      default:
        report_.t_transition += span;
        current_cycle_.t_transition += span;
        break;
    }
    if (options_.record_timeline && report_.cycles > 0) {
      report_.timeline.push_back(StateInterval{state_, state_entered_, t, current_cycle_.index});
    }
    state_entered_ = t;
  }

  void visit_zero_length(PhyState s, double t) {
    if (options_.record_timeline) {
      report_.timeline.push_back(StateInterval{s, t, t, current_cycle_.index});
    }
  }

  void close_cycle(double t) {
    if (report_.cycles > 0) {
      current_cycle_.end = t;
      if (options_.record_cycles) {
        report_.cycle_log.push_back(current_cycle_);
      }
    }
    ++report_.cycles;
    current_cycle_ = CycleBreakdown{};
    current_cycle_.index = report_.cycles;
    current_cycle_.start = t;
  }

  void schedule_next_arrival() {
    pending_arrival_ = source_->next();
    if (pending_arrival_) {
      events_.schedule(pending_arrival_->time, EventKind::Arrival, kArrivalPriority);
    }
  }

  bool in_low_power_path() const {
    return state_ == PhyState::AtoF || state_ == PhyState::FastWake ||
           state_ == PhyState::FtoD || state_ == PhyState::DeepSleep;
  }

  void finish() {
    accrue(horizon_);
    current_cycle_.end = horizon_;
    if (options_.record_cycles && report_.cycles > 0) {
      report_.cycle_log.push_back(current_cycle_);
    }
    report_.frames_remaining = queue_.size() + (in_service_ ? 1 : 0);
    report_.t_total = horizon_;
    report_.phi_sim =
        (report_.t_active_busy + report_.t_transition + profile_.phi_fast * report_.t_fast +
         profile_.phi_deep * report_.t_deep) /
        report_.t_total;
    report_.mean_queue_delay =
        report_.frames_out > 0 ? delay_sum_ / static_cast<double>(report_.frames_out) : 0.0;
    report_.p_deep_observed =
        report_.wake_decisions > 0
            ? static_cast<double>(report_.deep_entries) / static_cast<double>(report_.wake_decisions)
            : 0.0;
  }

  PhyProfile profile_;
  CoalescingConfig cfg_;
  double horizon_;
  SimOptions options_;
  std::unique_ptr<ArrivalSource> source_;

  Queue events_;
  PhyState state_ = PhyState::Active;
  double state_entered_ = 0.0;
  std::deque<Frame> queue_;
  std::optional<Frame> in_service_;
  std::optional<Queue::Id> idle_timer_;
  std::optional<Queue::Id> dwell_timer_;
  bool dwell_expired_ = false;
  bool dwell_woke_ = false;
  std::optional<Arrival> pending_arrival_;
  double delay_sum_ = 0.0;

  CycleBreakdown current_cycle_{};
  SimReport report_{};
};

}  // namespace

const char* to_string(PhyState s) {
  switch (s) {
    case PhyState::Active: return "Active";
    case PhyState::AtoF: return "AtoF";
    case PhyState::FastWake: return "FastWake";
    case PhyState::FtoD: return "FtoD";
    case PhyState::DeepSleep: return "DeepSleep";
    case PhyState::FtoA: return "FtoA";
    case PhyState::DtoA: return "DtoA";
  }
  return "?";
}

SimReport simulate(const PhyProfile& profile, const CoalescingConfig& cfg,
                   const TrafficSpec& traffic, double horizon, std::uint64_t seed,
                   const SimOptions& options) {
  return Simulator(profile, cfg, traffic, horizon, seed, options).run();
}

}  // namespace dmeee
