#include "flowcast/episode_log.hpp"

#include <fstream>
#include <stdexcept>

#include "flowcast/common.hpp"

namespace flowcast {

void EpisodeLog::append(int64_t t_ticks, std::string kind,
                        nlohmann::json payload) {
  events.push_back({t_ticks, std::move(kind), std::move(payload)});
}

std::string EpisodeLog::line(const LogEvent& e) const {
  nlohmann::json j;
  j["t_ticks"] = e.t_ticks;
  j["t"] = format_fixed(e.t_ticks * tick_seconds, 3);
  j["kind"] = e.kind;
  if (!e.payload.is_null() && !e.payload.empty()) j["data"] = e.payload;
  return j.dump();  // nlohmann orders keys, so the line is canonical
}

uint64_t EpisodeLog::hash() const {
  uint64_t h = 0xCBF29CE484222325ull;
  for (const auto& e : events) {
    std::string l = line(e);
    h = fnv1a64(l, h);
    h = fnv1a64("\n", h);
  }
  return h;
}

int EpisodeLog::count(const std::string& kind) const {
  int n = 0;
  for (const auto& e : events)
    if (e.kind == kind) ++n;
  return n;
}

int64_t EpisodeLog::sum_counts(const std::string& kind) const {
  int64_t n = 0;
  for (const auto& e : events)
    if (e.kind == kind && e.payload.contains("count"))
      n += e.payload["count"].get<int64_t>();
  return n;
}

const LogEvent* EpisodeLog::first(const std::string& kind) const {
  for (const auto& e : events)
    if (e.kind == kind) return &e;
  return nullptr;
}

void EpisodeLog::save_jsonl(const std::string& path) const {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  for (const auto& e : events) f << line(e) << "\n";
}

EpisodeLog EpisodeLog::load_jsonl(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  EpisodeLog log;
  std::string l;
  while (std::getline(f, l)) {
    if (l.empty()) continue;
    auto j = nlohmann::json::parse(l);
    LogEvent e;
    e.t_ticks = j.at("t_ticks").get<int64_t>();
    e.kind = j.at("kind").get<std::string>();
    if (j.contains("data")) e.payload = j["data"];
    log.events.push_back(std::move(e));
  }
  return log;
}

}  // namespace flowcast
