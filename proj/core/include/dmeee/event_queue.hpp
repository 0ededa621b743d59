#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <unordered_set>
#include <vector>

namespace dmeee {

/// Time-ordered event calendar. Ties on the timestamp are broken first by
/// priority (lower pops first; arrivals use a lower priority value than
/// timers so a frame landing exactly when a timer fires is seen first), then
/// FIFO by insertion order.
///
/// cancel() marks a scheduled entry dead; dead entries are skipped and
/// discarded on pop. An id may only be cancelled while it is still scheduled
/// (cancel after pop leaves a stale marker that a later schedule never
/// reuses, but it skews size()).
template <typename Payload>
class EventQueue {
 public:
  using Id = std::uint64_t;

  struct Event {
    double time = 0.0;
    int priority = 0;
    Id id = 0;
    Payload payload{};
  };

  Id schedule(double time, Payload payload, int priority = 1) {
    const Id id = next_id_++;
    heap_.push(Event{time, priority, id, payload});
    return id;
  }

  bool cancel(Id id) {
    if (id >= next_id_) {
      return false;
    }
    return cancelled_.insert(id).second;
  }

  std::optional<Event> pop() {
    while (!heap_.empty()) {
      Event ev = heap_.top();
      heap_.pop();
      if (!cancelled_.empty() && cancelled_.erase(ev.id)) {
        continue;
      }
      return ev;
    }
    return std::nullopt;
  }

  bool empty() const { return size() == 0; }
  std::size_t size() const { return heap_.size() - cancelled_.size(); }

 private:
  struct Later {
    bool operator()(const Event& a, const Event& b) const {
      if (a.time != b.time) return a.time > b.time;
      if (a.priority != b.priority) return a.priority > b.priority;
      return a.id > b.id;
    }
  };

  std::priority_queue<Event, std::vector<Event>, Later> heap_;
  std::unordered_set<Id> cancelled_;
  Id next_id_ = 0;
};

}  // namespace dmeee
