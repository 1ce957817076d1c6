#include "flowcast/rng.hpp"

#include <cmath>

namespace flowcast {

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // 1 - u01() keeps the log argument in (0,1].
  double u1 = 1.0 - u01();
  double u2 = u01();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 6.283185307179586476925287 * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

}  // namespace flowcast
