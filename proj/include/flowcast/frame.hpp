#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace flowcast {

// Row-major RGB byte image. timestamp is the capture time in seconds of
// simulated world time.
struct Frame {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> rgb;  // 3 bytes per pixel
  double timestamp = 0.0;

  static Frame filled(int w, int h, uint8_t r, uint8_t g, uint8_t b);
  uint8_t* px(int x, int y) { return rgb.data() + 3 * (y * width + x); }
  const uint8_t* px(int x, int y) const { return rgb.data() + 3 * (y * width + x); }
  bool in_bounds(int x, int y) const {
    return x >= 0 && x < width && y >= 0 && y < height;
  }
  bool operator==(const Frame& o) const {
    return width == o.width && height == o.height && rgb == o.rgb;
  }
};

// Binary segmentation mask over the same grid.
struct Mask {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> on;  // 0 or 1 per pixel
  double timestamp = 0.0;

  int count() const;
  bool at(int x, int y) const { return on[y * width + x] != 0; }
};

// PPM (P6) dump for eyeballing episodes.
void write_ppm(const Frame& frame, const std::string& path);
Frame read_ppm(const std::string& path);

}  // namespace flowcast
