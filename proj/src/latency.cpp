#include "flowcast/latency.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace flowcast {

void LatencyProfile::validate() const {
  if (delta_o < 0 || delta_i < 0 || delta_c < 0)
    throw std::invalid_argument("LatencyProfile: negative delay");
  if (dt <= 0)
    throw std::invalid_argument("LatencyProfile: dt must be positive");
  if (jitter_frac < 0 || jitter_frac >= 1)
    throw std::invalid_argument("LatencyProfile: jitter_frac outside [0,1)");
}

Horizon compute_horizon(const LatencyProfile& profile, int margin_steps) {
  profile.validate();
  if (margin_steps < 0)
    throw std::invalid_argument("compute_horizon: negative margin");
  double q = profile.total() / profile.dt;
  double r = std::round(q);
  int h;
  if (std::abs(profile.total() - r * profile.dt) <= 1e-9 * profile.dt)
    h = static_cast<int>(r);
  else
    h = static_cast<int>(std::ceil(q));
  return Horizon{h + margin_steps};
}

double sample_total_latency(const LatencyProfile& profile, Rng& rng) {
  profile.validate();
  double u = 1.0 - profile.jitter_frac + 2.0 * profile.jitter_frac * rng.u01();
  return profile.total() * u;
}

std::string profile_to_json(const LatencyProfile& profile) {
  nlohmann::json j{{"delta_o", profile.delta_o},
                   {"delta_i", profile.delta_i},
                   {"delta_c", profile.delta_c},
                   {"dt", profile.dt},
                   {"jitter_frac", profile.jitter_frac}};
  return j.dump(2);
}

LatencyProfile profile_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  LatencyProfile p;
  p.delta_o = j.at("delta_o").get<double>();
  p.delta_i = j.at("delta_i").get<double>();
  p.delta_c = j.at("delta_c").get<double>();
  p.dt = j.at("dt").get<double>();
  p.jitter_frac = j.value("jitter_frac", 0.0);
  p.validate();
  return p;
}

void save_profile(const LatencyProfile& profile, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << profile_to_json(profile) << "\n";
}

LatencyProfile load_profile(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::string text((std::istreambuf_iterator<char>(f)),
                   std::istreambuf_iterator<char>());
  return profile_from_json(text);
}

}  // namespace flowcast
