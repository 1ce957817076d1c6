#include "flowcast/demos.hpp"

#include <stdexcept>

namespace flowcast {

EpisodeRecord collect_expert_episode(const TaskSpec& task, uint64_t seed,
                                     int length_ticks, int warmup_ticks,
                                     int chunk_n, bool keep_masks) {
  if (length_ticks <= 0 || chunk_n <= 0 || warmup_ticks < 0)
    throw std::invalid_argument("collect_expert_episode: bad sizes");

  EpisodeRecord rec;
  rec.task = task;
  rec.seed = seed;
  rec.warmup_ticks = warmup_ticks;
  rec.chunk_n = chunk_n;
  rec.frames.reserve(length_ticks);
  rec.states.reserve(length_ticks);

  WorldState w = spawn(task, seed);
  bool was_grasped = false;
  double grasp_start = -1.0;

  for (int k = 0; k < length_ticks; ++k) {
    rec.frames.push_back(render(w));
    if (keep_masks) rec.masks.push_back(object_mask(w));
    rec.states.push_back(proprio(w));
    rec.obj_pos.push_back(w.object_pos);
    rec.obj_vel.push_back(w.object_vel);

    std::vector<ActionStep> chunk;
    if (k < warmup_ticks)
      chunk.assign(chunk_n, ActionStep{});
    else
      chunk = expert_action(w, chunk_n);
    rec.actions.push_back(chunk[0]);
    rec.chunks.push_back(std::move(chunk));

    step(w, rec.actions.back(), task.dt);

    if (w.grasped && !was_grasped) {
      grasp_start = w.t;
      if (rec.grasp_time < 0) rec.grasp_time = w.t;
    }
    if (!w.grasped && was_grasped) grasp_start = -1.0;
    if (w.grasped && grasp_start >= 0 && !rec.success &&
        w.t - grasp_start >= task.hold_time - 1e-9 &&
        w.t <= task.timeout + 1e-9) {
      rec.success = true;
    }
    was_grasped = w.grasped;
  }
  return rec;
}

}  // namespace flowcast
