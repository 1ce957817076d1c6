#include "flowcast/world.hpp"

#include <cmath>
#include <stdexcept>

#include "flowcast/episode_log.hpp"

namespace flowcast {

namespace {

constexpr uint8_t kBg[3] = {90, 90, 90};
constexpr uint8_t kObject[3] = {225, 165, 40};
constexpr uint8_t kGripper[3] = {60, 130, 220};

double clamp_axis(double v, double lo, double hi) {
  return v < lo ? lo : (v > hi ? hi : v);
}

}  // namespace

const char* motion_kind_name(MotionKind k) {
  switch (k) {
    case MotionKind::Static: return "static";
    case MotionKind::ConstantVelocity: return "constant_velocity";
    case MotionKind::PullBack: return "pull_back";
    case MotionKind::StochasticRoll: return "stochastic_roll";
  }
  return "?";
}

MotionKind motion_kind_from_name(const std::string& name) {
  if (name == "static") return MotionKind::Static;
  if (name == "constant_velocity") return MotionKind::ConstantVelocity;
  if (name == "pull_back") return MotionKind::PullBack;
  if (name == "stochastic_roll") return MotionKind::StochasticRoll;
  throw std::invalid_argument("unknown motion kind: " + name);
}

void TaskSpec::validate() const {
  if (world_size <= 0 || frame_px <= 0)
    throw std::invalid_argument("TaskSpec: bad world geometry");
  if (object_radius <= 0 || object_radius >= world_size / 2)
    throw std::invalid_argument("TaskSpec: object radius out of range");
  if (spawn_x_lo > spawn_x_hi || spawn_y_lo > spawn_y_hi)
    throw std::invalid_argument("TaskSpec: inverted spawn range");
  double lo = object_radius, hi = world_size - object_radius;
  if (spawn_x_lo < lo || spawn_x_hi > hi || spawn_y_lo < lo || spawn_y_hi > hi)
    throw std::invalid_argument("TaskSpec: spawn region exceeds world bounds");
  if (ee_home.x < 0 || ee_home.x >= world_size || ee_home.y < 0 ||
      ee_home.y >= world_size)
    throw std::invalid_argument("TaskSpec: ee home outside world");
  if (speed_lo < 0 || speed_lo > speed_hi)
    throw std::invalid_argument("TaskSpec: bad speed range");
  if (decel < 0) throw std::invalid_argument("TaskSpec: negative decel");
  if (resample_lo <= 0 || resample_lo > resample_hi)
    throw std::invalid_argument("TaskSpec: bad resample range");
  if (ee_max_speed <= 0 || gripper_close_time <= 0 || grasp_radius <= 0 ||
      speed_tolerance < 0 || hold_time < 0 || timeout <= 0 || dt <= 0)
    throw std::invalid_argument("TaskSpec: nonpositive dynamics parameter");
}

TaskSpec make_task(const std::string& name) {
  TaskSpec t;
  t.name = name;
  if (name == "constant_velocity") {
    // defaults
  } else if (name == "pull_back") {
    t.motion = MotionKind::PullBack;
    t.speed_lo = 2.2;
    t.speed_hi = 3.4;
    t.spawn_x_lo = 1.5;
    t.spawn_x_hi = 2.5;
    t.spawn_y_lo = 5.0;
    t.spawn_y_hi = 11.0;
    t.ee_home = {12.0, 8.0};
    t.timeout = 3.5;
  } else if (name == "stochastic_roll") {
    t.motion = MotionKind::StochasticRoll;
    t.speed_lo = 1.0;
    t.speed_hi = 3.0;
    t.spawn_x_lo = 3.0;
    t.spawn_x_hi = 13.0;
    t.spawn_y_lo = 3.0;
    t.spawn_y_hi = 13.0;
    t.timeout = 6.0;
  } else if (name == "static_reach") {
    t.motion = MotionKind::Static;
    t.spawn_x_lo = 2.0;
    t.spawn_x_hi = 3.0;
    t.spawn_y_lo = 7.0;
    t.spawn_y_hi = 9.0;
    t.ee_home = {14.0, 8.0};
    t.timeout = 6.0;
  } else {
    throw std::invalid_argument("unknown task: " + name);
  }
  t.validate();
  return t;
}

WorldState spawn(const TaskSpec& task, uint64_t seed) {
  task.validate();
  Rng root(seed);
  Rng pos_rng = root.fork(0);
  Rng motion_rng = root.fork(1);

  WorldState w;
  w.task = task;
  w.ee_pos = task.ee_home;
  w.object_pos = {pos_rng.uniform(task.spawn_x_lo, task.spawn_x_hi),
                  pos_rng.uniform(task.spawn_y_lo, task.spawn_y_hi)};

  MotionModel& m = w.motion;
  m.kind = task.motion;
  switch (task.motion) {
    case MotionKind::Static:
      break;
    case MotionKind::ConstantVelocity:
      m.velocity = {motion_rng.uniform(task.speed_lo, task.speed_hi), 0.0};
      break;
    case MotionKind::PullBack:
      m.velocity = {motion_rng.uniform(task.speed_lo, task.speed_hi), 0.0};
      m.decel = task.decel;
      break;
    case MotionKind::StochasticRoll: {
      m.speed_lo = task.speed_lo;
      m.speed_hi = task.speed_hi;
      m.resample_lo = task.resample_lo;
      m.resample_hi = task.resample_hi;
      m.roll_rng = root.fork(2);
      double ang = m.roll_rng.uniform(0.0, 6.283185307179586);
      double speed = m.roll_rng.uniform(m.speed_lo, m.speed_hi);
      m.velocity = {speed * std::cos(ang), speed * std::sin(ang)};
      m.roll_timer = m.roll_rng.uniform(m.resample_lo, m.resample_hi);
      break;
    }
  }
  w.object_vel = m.velocity;
  return w;
}

void advance_object(WorldState& w, double dt) {
  MotionModel& m = w.motion;
  TaskSpec& task = w.task;
  Vec2 before = w.object_pos;

  switch (m.kind) {
    case MotionKind::Static:
      break;
    case MotionKind::ConstantVelocity:
      w.object_pos += m.velocity * dt;
      break;
    case MotionKind::PullBack: {
      w.object_pos += m.velocity * dt;
      double sp = m.velocity.norm();
      double ns = sp - m.decel * dt;
      m.velocity = ns <= 0 || sp == 0 ? Vec2{} : m.velocity * (ns / sp);
      break;
    }
    case MotionKind::StochasticRoll: {
      m.roll_timer -= dt;
      if (m.roll_timer <= 0) {
        double ang = m.roll_rng.uniform(0.0, 6.283185307179586);
        double speed = m.roll_rng.uniform(m.speed_lo, m.speed_hi);
        m.velocity = {speed * std::cos(ang), speed * std::sin(ang)};
        m.roll_timer = m.roll_rng.uniform(m.resample_lo, m.resample_hi);
      }
      w.object_pos += m.velocity * dt;
      break;
    }
  }

  // Keep the disk fully inside the world; rolling objects bounce.
  double lo = task.object_radius, hi = task.world_size - task.object_radius;
  if (w.object_pos.x < lo || w.object_pos.x > hi) {
    w.object_pos.x = clamp_axis(w.object_pos.x, lo, hi);
    if (m.kind == MotionKind::StochasticRoll) m.velocity.x = -m.velocity.x;
  }
  if (w.object_pos.y < lo || w.object_pos.y > hi) {
    w.object_pos.y = clamp_axis(w.object_pos.y, lo, hi);
    if (m.kind == MotionKind::StochasticRoll) m.velocity.y = -m.velocity.y;
  }

  w.object_vel = dt > 0 ? (w.object_pos - before) * (1.0 / dt) : Vec2{};
}

void step(WorldState& w, const ActionStep& action, double dt) {
  if (dt <= 0) throw std::invalid_argument("step: dt must be positive");
  const TaskSpec& task = w.task;

  if (action.gripper == GripperCmd::Close) {
    if (w.gripper.phase == GripperPhase::Open) {
      w.gripper.phase = GripperPhase::Closing;
      w.gripper.progress = 0.0;
    }
  } else if (action.gripper == GripperCmd::Open) {
    w.gripper.phase = GripperPhase::Open;
    w.gripper.progress = 0.0;
    if (w.grasped) {
      // Released object resumes its motion model from wherever it is.
      w.grasped = false;
    }
  }

  Vec2 before_ee = w.ee_pos;
  Vec2 disp = clamp_norm(action.delta * (dt / task.dt), task.ee_max_speed * dt);
  w.ee_pos += disp;
  w.ee_pos.x = clamp_axis(w.ee_pos.x, 0.4, task.world_size - 0.4);
  w.ee_pos.y = clamp_axis(w.ee_pos.y, 0.4, task.world_size - 0.4);
  w.ee_vel = (w.ee_pos - before_ee) * (1.0 / dt);

  if (w.grasped) {
    Vec2 before = w.object_pos;
    w.object_pos = w.ee_pos + w.grasp_offset;
    double lo = task.object_radius, hi = task.world_size - task.object_radius;
    w.object_pos.x = clamp_axis(w.object_pos.x, lo, hi);
    w.object_pos.y = clamp_axis(w.object_pos.y, lo, hi);
    w.object_vel = (w.object_pos - before) * (1.0 / dt);
    // Model-internal state (pull-back decay, roll resampling) keeps evolving
    // on the clock even while the object is carried.
    WorldState scratch = w;
    advance_object(scratch, dt);
    w.motion = scratch.motion;
  } else {
    advance_object(w, dt);
  }

  if (w.gripper.phase == GripperPhase::Closing) {
    w.gripper.progress += dt / task.gripper_close_time;
    if (w.gripper.progress >= 1.0) {
      w.gripper.phase = GripperPhase::Closed;
      w.gripper.progress = 1.0;
      bool near = dist(w.ee_pos, w.object_pos) <= task.grasp_radius;
      bool matched = (w.ee_vel - w.object_vel).norm() <= task.speed_tolerance;
      if (near && matched) {
        w.grasped = true;
        w.grasp_offset = w.object_pos - w.ee_pos;
      }
    }
  }

  w.t += dt;
}

Vec2 predict_object(const WorldState& w, double T) {
  if (w.grasped || T <= 0) return w.object_pos;
  WorldState scratch = w;
  double dt = w.task.dt;
  int full = static_cast<int>(T / dt + 1e-9);
  for (int i = 0; i < full; ++i) advance_object(scratch, dt);
  double rem = T - full * dt;
  if (rem > 1e-9) advance_object(scratch, rem);
  return scratch.object_pos;
}

void draw_gripper_px(Frame& frame, double cx, double cy, double closure,
                     double px_per_unit) {
  double s = 1.25 - 0.9 * clampd(closure, 0.0, 1.0);  // claw offset, units
  double ppu = px_per_unit;
  auto draw_rect = [&](double wx0, double wy0, double wx1, double wy1) {
    int x0 = static_cast<int>(std::floor(wx0 * ppu));
    int x1 = static_cast<int>(std::ceil(wx1 * ppu));
    int y0 = static_cast<int>(std::floor(wy0 * ppu));
    int y1 = static_cast<int>(std::ceil(wy1 * ppu));
    for (int y = y0; y <= y1; ++y) {
      for (int x = x0; x <= x1; ++x) {
        if (!frame.in_bounds(x, y)) continue;
        double wx = (x + 0.5) / ppu, wy = (y + 0.5) / ppu;
        if (wx >= wx0 && wx <= wx1 && wy >= wy0 && wy <= wy1) {
          uint8_t* p = frame.px(x, y);
          p[0] = kGripper[0];
          p[1] = kGripper[1];
          p[2] = kGripper[2];
        }
      }
    }
  };
  double wx = cx / ppu, wy = cy / ppu;
  // Two claws plus a beam joining them above.
  draw_rect(wx - s - 0.25, wy - 1.0, wx - s + 0.25, wy + 1.0);
  draw_rect(wx + s - 0.25, wy - 1.0, wx + s + 0.25, wy + 1.0);
  draw_rect(wx - s - 0.25, wy - 1.45, wx + s + 0.25, wy - 1.05);
}

Frame render(const WorldState& w) {
  const TaskSpec& task = w.task;
  Frame f = Frame::filled(task.frame_px, task.frame_px, kBg[0], kBg[1], kBg[2]);
  f.timestamp = w.t;

  double ppu = task.px_per_unit();
  double r = task.object_radius;
  int x0 = static_cast<int>(std::floor((w.object_pos.x - r) * ppu));
  int x1 = static_cast<int>(std::ceil((w.object_pos.x + r) * ppu));
  int y0 = static_cast<int>(std::floor((w.object_pos.y - r) * ppu));
  int y1 = static_cast<int>(std::ceil((w.object_pos.y + r) * ppu));
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) {
      if (!f.in_bounds(x, y)) continue;
      double wx = (x + 0.5) / ppu, wy = (y + 0.5) / ppu;
      double dx = wx - w.object_pos.x, dy = wy - w.object_pos.y;
      if (dx * dx + dy * dy <= r * r) {
        uint8_t* p = f.px(x, y);
        p[0] = kObject[0];
        p[1] = kObject[1];
        p[2] = kObject[2];
      }
    }
  }

  double closure = w.gripper.phase == GripperPhase::Open ? 0.0
                   : w.gripper.phase == GripperPhase::Closing ? w.gripper.progress
                                                              : 1.0;
  draw_gripper_px(f, w.ee_pos.x * ppu, w.ee_pos.y * ppu, closure, ppu);
  return f;
}

ProprioState proprio(const WorldState& w) {
  return {w.ee_pos, w.gripper.phase, w.gripper.progress, w.grasped};
}

bool check_success(const EpisodeLog& log, const TaskSpec& task) {
  if (log.events.empty()) return false;
  double end_t = log.seconds(log.events.back());
  double grasp_start = -1.0;
  auto held_long_enough = [&](double from, double until) {
    return until - from >= task.hold_time - 1e-9;
  };
  for (const auto& e : log.events) {
    if (e.kind != "GraspEvent") continue;
    bool g = e.payload.at("grasped").get<bool>();
    double t = log.seconds(e);
    if (g && grasp_start < 0) {
      grasp_start = t;
    } else if (!g && grasp_start >= 0) {
      if (held_long_enough(grasp_start, t)) return true;
      grasp_start = -1.0;
    }
  }
  return grasp_start >= 0 && held_long_enough(grasp_start, end_t);
}

Mask object_mask(const WorldState& w) {
  const TaskSpec& task = w.task;
  Mask m;
  m.width = task.frame_px;
  m.height = task.frame_px;
  m.on.assign(static_cast<size_t>(task.frame_px) * task.frame_px, 0);
  m.timestamp = w.t;

  double ppu = task.px_per_unit();
  double r = task.object_radius;
  int x0 = static_cast<int>(std::floor((w.object_pos.x - r) * ppu));
  int x1 = static_cast<int>(std::ceil((w.object_pos.x + r) * ppu));
  int y0 = static_cast<int>(std::floor((w.object_pos.y - r) * ppu));
  int y1 = static_cast<int>(std::ceil((w.object_pos.y + r) * ppu));
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) {
      if (x < 0 || x >= m.width || y < 0 || y >= m.height) continue;
      double wx = (x + 0.5) / ppu, wy = (y + 0.5) / ppu;
      double dx = wx - w.object_pos.x, dy = wy - w.object_pos.y;
      if (dx * dx + dy * dy <= r * r) m.on[y * m.width + x] = 1;
    }
  }
  return m;
}

}  // namespace flowcast
