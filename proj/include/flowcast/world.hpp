#pragma once

#include <string>
#include <vector>

#include "flowcast/common.hpp"
#include "flowcast/frame.hpp"
#include "flowcast/rng.hpp"

namespace flowcast {

enum class MotionKind { Static, ConstantVelocity, PullBack, StochasticRoll };

const char* motion_kind_name(MotionKind k);
MotionKind motion_kind_from_name(const std::string& name);

// Per-object motion state. PullBack decelerates its launch velocity to rest;
// StochasticRoll resamples speed and direction at random intervals from an
// owned generator so stepping stays deterministic per spawn seed.
struct MotionModel {
  MotionKind kind = MotionKind::Static;
  Vec2 velocity{};
  double decel = 0.0;        // PullBack, units/s^2
  double speed_lo = 0.0;     // StochasticRoll band
  double speed_hi = 0.0;
  double resample_lo = 0.0;  // StochasticRoll, seconds between resamples
  double resample_hi = 0.0;
  double roll_timer = 0.0;
  Rng roll_rng{0};
};

enum class GripperPhase { Open, Closing, Closed };
enum class GripperCmd { Hold, Close, Open };

struct GripperState {
  GripperPhase phase = GripperPhase::Open;
  double progress = 0.0;  // only meaningful while Closing, 0..1
};

// One control-period command: an end-effector displacement for a full
// control period plus a gripper command. step() integrates the matching
// velocity over whatever dt it is called with, so the executor can split a
// period at event boundaries.
struct ActionStep {
  Vec2 delta{};
  GripperCmd gripper = GripperCmd::Hold;
};

struct TaskSpec {
  std::string name = "constant_velocity";
  MotionKind motion = MotionKind::ConstantVelocity;

  double world_size = 16.0;  // square world, units
  int frame_px = 64;
  double object_radius = 0.9;

  Vec2 ee_home{13.0, 8.0};
  double spawn_x_lo = 1.5, spawn_x_hi = 3.5;
  double spawn_y_lo = 4.0, spawn_y_hi = 12.0;
  // ConstantVelocity: +x speed. PullBack: launch speed. StochasticRoll: band.
  double speed_lo = 1.2, speed_hi = 3.2;
  double decel = 1.25;
  double resample_lo = 0.4, resample_hi = 1.0;

  double ee_max_speed = 6.0;       // units/s
  double gripper_close_time = 0.3; // seconds from Close command to Closed
  double grasp_radius = 0.75;
  double speed_tolerance = 1.2;    // max |relative velocity| at close for a grasp
  double hold_time = 0.5;          // grasp must persist this long for success
  double timeout = 5.0;
  double dt = 0.1;                 // control period

  double px_per_unit() const { return frame_px / world_size; }
  void validate() const;  // throws std::invalid_argument
};

TaskSpec make_task(const std::string& name);  // named presets, see world.cpp

struct WorldState {
  double t = 0.0;
  Vec2 object_pos{};
  Vec2 object_vel{};
  Vec2 ee_pos{};
  Vec2 ee_vel{};
  GripperState gripper;
  bool grasped = false;
  Vec2 grasp_offset{};  // object - ee at the moment of grasp
  MotionModel motion;
  TaskSpec task;
};

// Draws object spawn position and motion parameters from the seed and
// places the end effector at home. Same seed, same world.
WorldState spawn(const TaskSpec& task, uint64_t seed);

// Advances the world by dt (any positive fraction of a control period).
// Explicit Euler for the object; the end effector moves by
// action.delta * (dt / task.dt) clamped to ee_max_speed * dt. The gripper
// command is applied once at the start of the call; pass Hold when
// re-stepping the same action over a split period. Positions clamp so the
// object disk and the end effector stay inside the world.
void step(WorldState& w, const ActionStep& action, double dt);

// Advances only the object under its motion model (ignores any grasp).
void advance_object(WorldState& w, double dt);

// Object position T seconds ahead under the true motion model, using the
// same Euler stepping at task.dt increments the simulator itself uses.
Vec2 predict_object(const WorldState& w, double T);

Frame render(const WorldState& w);

// Ground-truth object mask, ignoring any gripper occlusion in the render.
Mask object_mask(const WorldState& w);

// Claw sprite painter shared by render() and the dataset occlusion
// synthesis. closure: 0 fully open .. 1 fully closed. Pixel coordinates.
void draw_gripper_px(Frame& frame, double cx, double cy, double closure,
                     double px_per_unit);

// Robot-side state snapshot a policy is allowed to see (no object truth).
struct ProprioState {
  Vec2 ee_pos{};
  GripperPhase phase = GripperPhase::Open;
  double progress = 0.0;
  bool grasped = false;
};

ProprioState proprio(const WorldState& w);

struct EpisodeLog;

// True iff the log shows a grasp that happened and then stayed held for
// task.hold_time, completing before the episode end. Works on any log that
// carries GraspEvent entries with a boolean "grasped" payload.
bool check_success(const EpisodeLog& log, const TaskSpec& task);

}  // namespace flowcast
