#include "ratsemi/hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ratsemi/kernels.hpp"

namespace ratsemi {

namespace {

constexpr std::size_t kLeafSize = 64;
constexpr std::size_t kBruteForceBelow = 2000;

double box_sq_dist(const std::array<double, 3>& lo, const std::array<double, 3>& hi, const std::array<double, 3>& q) {
  double s = 0.0;
  for (int k = 0; k < 3; ++k) {
    const double d = q[k] < lo[k] ? lo[k] - q[k] : (q[k] > hi[k] ? q[k] - hi[k] : 0.0);
    s += d * d;
  }
  return s;
}

std::vector<std::array<double, 3>> lift_points(std::span<const SpherePoint> pts) {
  std::vector<std::array<double, 3>> out;
  out.reserve(pts.size());
  for (const SpherePoint& p : pts) out.push_back(p.on_sphere());
  return out;
}

}  // namespace

SphereIndex::SphereIndex(std::span<const SpherePoint> points) {
  if (points.empty()) throw std::invalid_argument("SphereIndex needs at least one point");
  std::vector<std::array<double, 3>> pts = lift_points(points);
  nodes_.reserve(2 * (pts.size() / kLeafSize + 1));
  build(pts, 0, pts.size());
  xs_.reserve(pts.size());
  ys_.reserve(pts.size());
  zs_.reserve(pts.size());
  for (const auto& p : pts) {
    xs_.push_back(p[0]);
    ys_.push_back(p[1]);
    zs_.push_back(p[2]);
  }
}

int SphereIndex::build(std::vector<std::array<double, 3>>& pts, std::size_t begin, std::size_t end) {
  Node node;
  node.begin = begin;
  node.end = end;
  node.lo = node.hi = pts[begin];
  for (std::size_t k = begin; k < end; ++k) {
    for (int a = 0; a < 3; ++a) {
      node.lo[a] = std::min(node.lo[a], pts[k][a]);
      node.hi[a] = std::max(node.hi[a], pts[k][a]);
    }
  }
  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back(node);
  if (end - begin <= kLeafSize) return id;

  int axis = 0;
  for (int a = 1; a < 3; ++a) {
    if (node.hi[a] - node.lo[a] > node.hi[axis] - node.lo[axis]) axis = a;
  }
  const std::size_t mid = begin + (end - begin) / 2;
  std::nth_element(pts.begin() + static_cast<std::ptrdiff_t>(begin), pts.begin() + static_cast<std::ptrdiff_t>(mid),
                   pts.begin() + static_cast<std::ptrdiff_t>(end),
                   [axis](const auto& p, const auto& q) { return p[axis] < q[axis]; });
  const int left = build(pts, begin, mid);
  const int right = build(pts, mid, end);
  nodes_[id].left = left;
  nodes_[id].right = right;
  return id;
}

void SphereIndex::search(int id, const std::array<double, 3>& q, double& best, double good_enough) const {
  const Node& node = nodes_[static_cast<std::size_t>(id)];
  if (node.left < 0) {
    const std::size_t n = node.end - node.begin;
    const double d = kernels::min_sq_dist3({xs_.data() + node.begin, n}, {ys_.data() + node.begin, n},
                                           {zs_.data() + node.begin, n}, q[0], q[1], q[2]);
    best = std::min(best, d);
    return;
  }
  const Node& l = nodes_[static_cast<std::size_t>(node.left)];
  const Node& r = nodes_[static_cast<std::size_t>(node.right)];
  const double dl = box_sq_dist(l.lo, l.hi, q);
  const double dr = box_sq_dist(r.lo, r.hi, q);
  const int first = dl <= dr ? node.left : node.right;
  const int second = dl <= dr ? node.right : node.left;
  const double d_first = std::min(dl, dr);
  const double d_second = std::max(dl, dr);
  if (d_first < best) search(first, q, best, good_enough);
  if (best < good_enough) return;
  if (d_second < best) search(second, q, best, good_enough);
}

double SphereIndex::nearest_sq(const std::array<double, 3>& q, double good_enough) const {
  double best = std::numeric_limits<double>::infinity();
  search(0, q, best, good_enough);
  return best;
}

double directed_hausdorff(const PointCloud& a, const PointCloud& b) {
  if (a.points.empty() || b.points.empty()) throw std::invalid_argument("hausdorff needs nonempty clouds");
  double worst = 0.0;
  if (b.points.size() < kBruteForceBelow) {
    for (const SpherePoint& p : a.points) {
      double best = std::numeric_limits<double>::infinity();
      for (const SpherePoint& q : b.points) best = std::min(best, spherical_dist(p, q));
      worst = std::max(worst, best);
    }
    return worst;
  }
  const SphereIndex index(b.points);
  double worst_sq = 0.0;
  for (const SpherePoint& p : a.points) worst_sq = std::max(worst_sq, index.nearest_sq(p.on_sphere(), worst_sq));
  return std::min(std::sqrt(worst_sq), 2.0);
}

double hausdorff(const PointCloud& a, const PointCloud& b) {
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

}  // namespace ratsemi
