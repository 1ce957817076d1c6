#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

namespace flowcast {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
  double norm() const { return std::hypot(x, y); }
};

inline double dist(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

// Clamps v to length at most max_len (no-op for the zero vector).
inline Vec2 clamp_norm(const Vec2& v, double max_len) {
  double n = v.norm();
  if (n <= max_len || n == 0.0) return v;
  return v * (max_len / n);
}

inline double clampd(double v, double lo, double hi) {
  return std::min(std::max(v, lo), hi);
}

// FNV-1a 64-bit, used for log and weight hashing.
inline uint64_t fnv1a64(const void* data, size_t n, uint64_t h = 0xCBF29CE484222325ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001B3ull;
  }
  return h;
}

inline uint64_t fnv1a64(std::string_view s, uint64_t h = 0xCBF29CE484222325ull) {
  return fnv1a64(s.data(), s.size(), h);
}

std::string hex64(uint64_t v);

// Fixed-decimal formatting for CSV output ("%.*f").
std::string format_fixed(double v, int decimals);

}  // namespace flowcast
