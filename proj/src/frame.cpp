#include "flowcast/frame.hpp"

#include <fstream>
#include <numeric>
#include <stdexcept>

namespace flowcast {

Frame Frame::filled(int w, int h, uint8_t r, uint8_t g, uint8_t b) {
  Frame f;
  f.width = w;
  f.height = h;
  f.rgb.resize(static_cast<size_t>(w) * h * 3);
  for (size_t i = 0; i < f.rgb.size(); i += 3) {
    f.rgb[i] = r;
    f.rgb[i + 1] = g;
    f.rgb[i + 2] = b;
  }
  return f;
}

int Mask::count() const {
  return std::accumulate(on.begin(), on.end(), 0);
}

void write_ppm(const Frame& frame, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << "P6\n" << frame.width << " " << frame.height << "\n255\n";
  f.write(reinterpret_cast<const char*>(frame.rgb.data()),
          static_cast<std::streamsize>(frame.rgb.size()));
}

Frame read_ppm(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::string magic;
  f >> magic;
  if (magic != "P6") throw std::runtime_error(path + ": not a P6 ppm");
  int w = 0, h = 0, maxval = 0;
  f >> w >> h >> maxval;
  if (w <= 0 || h <= 0 || maxval != 255)
    throw std::runtime_error(path + ": unsupported ppm header");
  f.get();  // single whitespace after header
  Frame out;
  out.width = w;
  out.height = h;
  out.rgb.resize(static_cast<size_t>(w) * h * 3);
  f.read(reinterpret_cast<char*>(out.rgb.data()),
         static_cast<std::streamsize>(out.rgb.size()));
  if (!f) throw std::runtime_error(path + ": truncated ppm");
  return out;
}

}  // namespace flowcast
