#pragma once

#include <vector>

#include "flowcast/world.hpp"

namespace flowcast {

// Scripted intercept controller used to generate demonstrations. Returns an
// n-step chunk by rolling its own decision rule forward against the true
// motion model: aim at the earliest reachable intercept point, converge to
// velocity-matched tracking, close when near and matched, hold after a
// grasp. Deterministic for a given world state.
std::vector<ActionStep> expert_action(const WorldState& w, int n);

}  // namespace flowcast
