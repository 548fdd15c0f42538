#include "ratsemi/saturation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace ratsemi {

namespace {

constexpr double kOutsideCell = 1e-4;
constexpr std::uint64_t kOutsideTag = 1ULL << 63;

// Near a critical value an inverse branch behaves like a square root, so a
// propagation cell of width δ leaves a hole of width ~√δ among the preimages.
// Sub-pixels of width ≤ pixel²/4 keep those holes below a pixel.
std::int64_t subdivision(const RasterGrid& grid) {
  const double pixel = std::min(grid.window.width / grid.resolution.w, grid.window.height / grid.resolution.h);
  return std::clamp(static_cast<std::int64_t>(std::ceil(4.0 / pixel)), std::int64_t{4}, std::int64_t{4096});
}

class CellKeys {
 public:
  explicit CellKeys(const RasterGrid& grid) : grid_(grid), sub_(subdivision(grid)) {}

  std::uint64_t key(const SpherePoint& p) const {
    if (!p.infinite) {
      if (grid_.locate(p.z)) {
        const Window& w = grid_.window;
        const std::int64_t cols = std::int64_t{grid_.resolution.w} * sub_;
        const std::int64_t rows = std::int64_t{grid_.resolution.h} * sub_;
        const auto col = std::clamp(static_cast<std::int64_t>((p.z.real() - w.left()) / w.width * cols), std::int64_t{0}, cols - 1);
        const auto row = std::clamp(static_cast<std::int64_t>((w.top() - p.z.imag()) / w.height * rows), std::int64_t{0}, rows - 1);
        return static_cast<std::uint64_t>(row * cols + col);
      }
    }
    const auto s = p.on_sphere();
    std::uint64_t k = kOutsideTag;
    for (int a = 0; a < 3; ++a) {
      const auto q = static_cast<std::uint64_t>(std::floor((s[a] + 1.0) / kOutsideCell));
      k |= (q & 0xfffff) << (20 * a);
    }
    return k;
  }

 private:
  const RasterGrid& grid_;
  std::int64_t sub_;
};

}  // namespace

SaturationResult e_set_saturation(const SemigroupSpec& spec, const PointCloud& seed, std::size_t rounds) {
  spec.validate();
  if (seed.points.empty()) throw std::invalid_argument("saturation seed is empty");
  std::vector<NumericMap> maps;
  for (const RationalMap& g : spec.generators) maps.emplace_back(g);

  SaturationResult result{RasterGrid(spec.window, spec.resolution), 0, false, {}, 0, false};
  const CellKeys keys(result.grid);
  std::unordered_set<std::uint64_t> seen;
  std::vector<SpherePoint> frontier;

  auto record = [&](const SpherePoint& p, std::vector<SpherePoint>& next) {
    result.grid.add(p);
    if (seen.size() > kSaturationCellCap) return;
    if (seen.insert(keys.key(p)).second) next.push_back(p);
  };

  for (const SpherePoint& p : seed.points) record(p, frontier);
  result.occupied_per_round.push_back(result.grid.occupied());

  std::vector<SpherePoint> images;
  while (result.rounds_run < rounds && !frontier.empty() && seen.size() <= kSaturationCellCap) {
    std::vector<SpherePoint> next;
    for (const NumericMap& f : maps) {
      images.resize(frontier.size());
      f.evaluate_batch(frontier, images);
      for (const SpherePoint& q : images) record(q, next);
      for (const SpherePoint& p : frontier) {
        if (seen.size() > kSaturationCellCap) break;
        for (const SpherePoint& q : f.preimages(p)) record(q, next);
      }
    }
    frontier = std::move(next);
    ++result.rounds_run;
    result.occupied_per_round.push_back(result.grid.occupied());
  }
  result.fixpoint = frontier.empty();
  result.capped = seen.size() > kSaturationCellCap;
  if (result.capped) result.fixpoint = false;
  result.cells_total = seen.size();
  return result;
}

}  // namespace ratsemi
