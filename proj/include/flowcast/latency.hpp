#pragma once

#include <string>

#include "flowcast/rng.hpp"

namespace flowcast {

// Latency budget of the perception-inference-actuation chain, in seconds.
// total() is the end-to-end delay an action suffers between the capture of
// the observation it was computed from and its effect on the world.
struct LatencyProfile {
  double delta_o = 0.125;   // observation transport (capture to policy input)
  double delta_i = 0.200;   // inference duration
  double delta_c = 0.050;   // controller actuation delay after pop
  double dt = 0.1;          // control period
  double jitter_frac = 0.0; // per-cycle multiplicative jitter on total()

  double total() const { return delta_o + delta_i + delta_c; }

  // Throws std::invalid_argument on negative delays, dt <= 0 or
  // jitter_frac outside [0,1).
  void validate() const;
};

// Prediction shift in whole control steps.
struct Horizon {
  int h = 0;
};

// h = ceil(total/dt), with values within 1e-9*dt of an exact multiple
// treated as that multiple so float noise in the sum of the components
// cannot bump the result up a step. margin_steps (>= 0) is added on top
// for deployments that want slack above the measured latency.
Horizon compute_horizon(const LatencyProfile& profile, int margin_steps = 0);

// One jittered draw of the total delay: total * u, u uniform in
// [1 - jitter_frac, 1 + jitter_frac]. Bit-identical across runs for the
// same rng state.
double sample_total_latency(const LatencyProfile& profile, Rng& rng);

std::string profile_to_json(const LatencyProfile& profile);
LatencyProfile profile_from_json(const std::string& text);
void save_profile(const LatencyProfile& profile, const std::string& path);
LatencyProfile load_profile(const std::string& path);

}  // namespace flowcast
