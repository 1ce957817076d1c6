#pragma once

#include <cstdint>

namespace flowcast {

// Deterministic 64-bit generator (splitmix64, Steele et al. constants).
// Produces the same sequence on every platform for a given seed, which is
// why std::mt19937 plus <random> distributions are not used anywhere in the
// library: their outputs are implementation defined.
//
// State update: s += 0x9E3779B97F4A7C15, output mix:
//   z = s; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9;
//   z = (z ^ z>>27) * 0x94D049BB133111EB; return z ^ z>>31.
class Rng {
 public:
  explicit Rng(uint64_t seed = 0) : state_(seed) {}

  uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0,1) with 53-bit resolution.
  double u01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

  // Inclusive bounds. Floor of a scaled 53-bit draw; the bias at this range
  // scale is far below anything the simulator can resolve.
  int uniform_int(int lo, int hi) {
    int span = hi - lo + 1;
    int v = lo + static_cast<int>(u01() * span);
    return v > hi ? hi : v;
  }

  // Standard normal via Box-Muller; caches the spare value.
  double normal();

  // Independent stream derived from this generator's current state and a
  // stream index. Does not advance this generator.
  Rng fork(uint64_t stream) const {
    uint64_t z = state_ + (stream + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return Rng(z ^ (z >> 31));
  }

 private:
  uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace flowcast
