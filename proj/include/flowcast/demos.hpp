#pragma once

#include <cstdint>
#include <vector>

#include "flowcast/expert.hpp"
#include "flowcast/world.hpp"

namespace flowcast {

// One zero-latency expert rollout recorded tick by tick. Index k holds the
// pre-action snapshot at time k*dt; chunks[k] is the full n-step expert
// chunk computed there (all-Hold during warmup) and actions[k] the step
// that was actually executed. Episodes run to the requested length even
// after a grasp so late ticks still provide hold-behavior samples.
struct EpisodeRecord {
  TaskSpec task;
  uint64_t seed = 0;
  int warmup_ticks = 0;
  int chunk_n = 0;

  std::vector<Frame> frames;
  std::vector<Mask> masks;  // un-occluded object masks (empty if not kept)
  std::vector<ProprioState> states;
  std::vector<Vec2> obj_pos;
  std::vector<Vec2> obj_vel;
  std::vector<ActionStep> actions;
  std::vector<std::vector<ActionStep>> chunks;

  bool success = false;     // grasp held task.hold_time within task.timeout
  double grasp_time = -1.0; // first grasp instant, -1 if never

  int length() const { return static_cast<int>(frames.size()); }
};

// The expert holds still for warmup_ticks (deployment parity with policies
// that need a frame-history buffer before their first inference), then runs
// closed loop, re-planning every control period.
EpisodeRecord collect_expert_episode(const TaskSpec& task, uint64_t seed,
                                     int length_ticks, int warmup_ticks,
                                     int chunk_n, bool keep_masks);

}  // namespace flowcast
