#pragma once

#include <array>
#include <span>
#include <vector>

#include "ratsemi/dynamics.hpp"

namespace ratsemi {

/// Nearest-neighbour index over sphere points in chordal distance (Euclidean
/// distance of the unit-sphere images). Leaves are scanned with the SIMD
/// distance kernel.
class SphereIndex {
 public:
  explicit SphereIndex(std::span<const SpherePoint> points);

  std::size_t size() const { return xs_.size(); }

  /// Squared chordal distance to the nearest indexed point. When `good_enough`
  /// is positive the search may stop as soon as some point is closer than
  /// sqrt(good_enough); the result is then an upper bound below it.
  double nearest_sq(const std::array<double, 3>& q, double good_enough = 0.0) const;

 private:
  struct Node {
    std::array<double, 3> lo;
    std::array<double, 3> hi;
    std::size_t begin;
    std::size_t end;
    int left = -1;
    int right = -1;
  };

  int build(std::vector<std::array<double, 3>>& pts, std::size_t begin, std::size_t end);
  void search(int node, const std::array<double, 3>& q, double& best, double good_enough) const;

  std::vector<Node> nodes_;
  std::vector<double> xs_, ys_, zs_;
};

/// sup over a of the chordal distance to b.
double directed_hausdorff(const PointCloud& a, const PointCloud& b);

/// Symmetric spherical Hausdorff distance. Brute force below 2000 points in
/// the target, tree-accelerated above.
double hausdorff(const PointCloud& a, const PointCloud& b);

}  // namespace ratsemi
