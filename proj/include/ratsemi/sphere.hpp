#pragma once

#include <array>
#include <complex>

namespace ratsemi {

using cplx = std::complex<double>;

/// A point of the Riemann sphere: a finite complex number or ∞. ∞ is a tag,
/// never a large float.
struct SpherePoint {
  cplx z{0.0, 0.0};
  bool infinite = false;

  static SpherePoint finite(cplx v) { return {v, false}; }
  static SpherePoint infinity() { return {cplx(0.0, 0.0), true}; }

  friend bool operator==(const SpherePoint& a, const SpherePoint& b) {
    return a.infinite == b.infinite && (a.infinite || a.z == b.z);
  }

  /// Inverse stereographic image on the unit sphere; ∞ is the north pole.
  /// Euclidean distance between images equals the chordal distance.
  std::array<double, 3> on_sphere() const;
};

/// Chordal distance 2|p−q| / √((1+|p|²)(1+|q|²)), in [0, 2].
double spherical_dist(const SpherePoint& p, const SpherePoint& q);

}  // namespace ratsemi
