#include "ratsemi/sphere.hpp"

#include <algorithm>
#include <cmath>

namespace ratsemi {

std::array<double, 3> SpherePoint::on_sphere() const {
  if (infinite) return {0.0, 0.0, 1.0};
  const double r = std::abs(z);
  if (r > 1.0) {
    // Work with 1/r to avoid overflowing r².
    const double s = 1.0 / r;
    const double denom = 1.0 + s * s;
    const cplx u = z / r;
    return {2.0 * s * u.real() / denom, 2.0 * s * u.imag() / denom, (1.0 - s * s) / denom};
  }
  const double denom = 1.0 + r * r;
  return {2.0 * z.real() / denom, 2.0 * z.imag() / denom, (r * r - 1.0) / denom};
}

double spherical_dist(const SpherePoint& p, const SpherePoint& q) {
  if (p.infinite && q.infinite) return 0.0;
  if (p.infinite) return 2.0 / std::hypot(1.0, std::abs(q.z));
  if (q.infinite) return 2.0 / std::hypot(1.0, std::abs(p.z));
  const double d = 2.0 * std::abs(p.z - q.z) / (std::hypot(1.0, std::abs(p.z)) * std::hypot(1.0, std::abs(q.z)));
  return std::min(d, 2.0);
}

}  // namespace ratsemi
