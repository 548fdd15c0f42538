#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ratsemi/numeric_map.hpp"
#include "ratsemi/rational_map.hpp"
#include "ratsemi/sphere.hpp"

namespace ratsemi {

struct Window {
  double cx = 0.0;
  double cy = 0.0;
  double width = 5.0;
  double height = 5.0;

  double left() const { return cx - width / 2; }
  double right() const { return cx + width / 2; }
  double top() const { return cy + height / 2; }
  double bottom() const { return cy - height / 2; }

  friend bool operator==(const Window&, const Window&) = default;
};

struct Resolution {
  int w = 400;
  int h = 400;

  friend bool operator==(const Resolution&, const Resolution&) = default;
};

struct SemigroupSpec {
  std::vector<RationalMap> generators;
  std::uint64_t seed = 42;
  std::size_t orbit_length = 100000;
  std::size_t burn_in = 100;
  int word_length_max = 4;
  Window window;
  Resolution resolution;
  int workers = 1;

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
};

struct PointCloud {
  std::vector<SpherePoint> points;
  std::string label;
};

inline SpherePoint default_start() { return SpherePoint::finite({0.37, 0.19}); }

/// Chaos game. Each of spec.workers walkers runs its own burn-in; the clouds
/// are concatenated in walker order and hold orbit_length − burn_in points.
PointCloud random_backward_orbit(const SemigroupSpec& spec, const SpherePoint& z0 = default_start());

struct FixedPoint {
  SpherePoint z;
  cplx multiplier;
};

/// Repelling fixed points (with multipliers) of all words up to
/// word_length_max, deduplicated.
std::vector<FixedPoint> repelling_fixed_points_detailed(const SemigroupSpec& spec);
PointCloud repelling_fixed_points(const SemigroupSpec& spec);

std::vector<SpherePoint> forward_orbit(const RationalMap& f, const SpherePoint& z0, std::size_t n);

PointCloud pushforward(const PointCloud& cloud, const RationalMap& k);

/// Points of the real segment [a, b] spaced at most `step` apart.
PointCloud segment_cloud(double a, double b, double step = 1e-3);

/// Splitmix64 finalizer; used to derive per-walker seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace ratsemi
