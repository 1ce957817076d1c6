#include "flowcast/expert.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace flowcast {

namespace {

// Object positions 0..max_k control steps ahead under the true model.
std::vector<Vec2> object_trajectory(const WorldState& w, int max_k) {
  std::vector<Vec2> traj;
  traj.reserve(max_k + 1);
  traj.push_back(w.object_pos);
  WorldState sim = w;
  for (int k = 0; k < max_k; ++k) {
    if (!w.grasped) advance_object(sim, sim.task.dt);
    traj.push_back(sim.object_pos);
  }
  return traj;
}

// One greedy decision for the current state.
ActionStep decide(const WorldState& w) {
  const TaskSpec& task = w.task;
  double dt = task.dt;

  if (w.grasped) return {};  // hold position, keep the grasp

  if (w.gripper.phase == GripperPhase::Closing ||
      w.gripper.phase == GripperPhase::Closed) {
    // Ride along with the object so the close finishes in range and
    // velocity-matched. A completed close that missed gets reopened.
    ActionStep a;
    a.delta = predict_object(w, dt) - w.ee_pos;
    if (w.gripper.phase == GripperPhase::Closed && !w.grasped)
      a.gripper = GripperCmd::Open;
    return a;
  }

  // Earliest control step at which the end effector can co-arrive with the
  // object, flying at 95% of max speed to keep slack for later tracking.
  int max_k = static_cast<int>(std::ceil(task.timeout / dt)) + 1;
  std::vector<Vec2> traj = object_trajectory(w, max_k);
  double chase_T = dt;
  Vec2 target = traj[1];
  bool reachable = false;
  for (int k = 1; k <= max_k; ++k) {
    double T = k * dt;
    if (dist(w.ee_pos, traj[k]) <= 0.95 * task.ee_max_speed * T) {
      chase_T = T;
      target = traj[k];
      reachable = true;
      break;
    }
  }

  ActionStep a;
  if (!reachable) {
    // Pure pursuit; never close on an unreachable object.
    a.delta = clamp_norm(target - w.ee_pos, task.ee_max_speed * dt);
    return a;
  }

  // Pace the approach to co-arrive, which converges to velocity matching.
  a.delta = (target - w.ee_pos) * (dt / chase_T);

  bool near = dist(w.ee_pos, w.object_pos) <= 0.6 * task.grasp_radius;
  double rel = ((a.delta * (1.0 / dt)) - w.object_vel).norm();
  if (near && rel <= 0.6 * task.speed_tolerance) a.gripper = GripperCmd::Close;
  return a;
}

}  // namespace

std::vector<ActionStep> expert_action(const WorldState& w, int n) {
  if (n <= 0) throw std::invalid_argument("expert_action: n must be positive");
  std::vector<ActionStep> chunk;
  chunk.reserve(n);
  WorldState sim = w;
  for (int i = 0; i < n; ++i) {
    ActionStep a = decide(sim);
    chunk.push_back(a);
    step(sim, a, sim.task.dt);
  }
  return chunk;
}

}  // namespace flowcast
