#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace flowcast {

// Timestamped event stream of one episode. Times are virtual-clock ticks
// (tick_seconds each) so serialization and hashing are exact. Event kinds
// used by the executor: ObsCaptured, ObsDelivered, InferStart, InferDone,
// ChunkEnqueued, StepsDiscarded, StaleDropped, MissedDeadline,
// ActionExecuted, GraspEvent, PathologicalConfig, Success, Timeout.
struct LogEvent {
  int64_t t_ticks = 0;
  std::string kind;
  nlohmann::json payload;  // object; may be empty
};

struct EpisodeLog {
  double tick_seconds = 0.01;
  std::vector<LogEvent> events;

  void append(int64_t t_ticks, std::string kind, nlohmann::json payload = {});
  double seconds(const LogEvent& e) const { return e.t_ticks * tick_seconds; }

  // Canonical one-line serialization of an event; hash() folds all lines.
  std::string line(const LogEvent& e) const;
  uint64_t hash() const;

  int count(const std::string& kind) const;
  // Sum of payload["count"] over events of the kind (discard accounting).
  int64_t sum_counts(const std::string& kind) const;
  const LogEvent* first(const std::string& kind) const;

  void save_jsonl(const std::string& path) const;
  static EpisodeLog load_jsonl(const std::string& path);
};

}  // namespace flowcast
