#pragma once

#include <vector>

#include "ratsemi/dynamics.hpp"
#include "ratsemi/raster.hpp"

namespace ratsemi {

struct SaturationResult {
  RasterGrid grid;
  std::size_t rounds_run = 0;
  bool fixpoint = false;
  /// Occupied in-window pixels after the seed (entry 0) and after each round.
  std::vector<std::size_t> occupied_per_round;
  /// Cells of the closure, including those outside the window.
  std::size_t cells_total = 0;
  /// Stopped because the closure outgrew kSaturationCellCap.
  bool capped = false;
};

inline constexpr std::size_t kSaturationCellCap = 8'000'000;

/// Grows the seed under forward images and full preimages of every
/// generator until no new cell appears or `rounds` is exhausted. Cells are
/// window pixels inside the window and small patches of the sphere outside
/// it; each cell is propagated through one representative point. Growth
/// stops early once more than kSaturationCellCap cells are known.
SaturationResult e_set_saturation(const SemigroupSpec& spec, const PointCloud& seed, std::size_t rounds);

inline constexpr std::size_t kDefaultSaturationRounds = 1000;

}  // namespace ratsemi
