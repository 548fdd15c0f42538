#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ratsemi/dynamics.hpp"

namespace ratsemi {

/// Per-pixel occupancy counts. Row 0 is the top edge of the window.
struct RasterGrid {
  Window window;
  Resolution resolution;
  std::vector<std::uint64_t> cells;
  std::uint64_t overflow = 0;

  RasterGrid(const Window& w, const Resolution& r);

  std::uint64_t& at(int row, int col) { return cells[static_cast<std::size_t>(row) * resolution.w + col]; }
  std::uint64_t at(int row, int col) const { return cells[static_cast<std::size_t>(row) * resolution.w + col]; }

  /// Pixel containing a finite point, or nothing outside the window.
  std::optional<std::pair<int, int>> locate(cplx z) const;
  bool add(const SpherePoint& p);

  std::size_t occupied() const;
  /// Rows whose cells touch the line Im z = 0 (empty when it misses the window).
  std::vector<int> axis_rows() const;

  friend bool operator==(const RasterGrid&, const RasterGrid&) = default;
};

RasterGrid rasterize(const PointCloud& cloud, const Window& window, const Resolution& resolution);

/// Binary PGM (P5), log-scaled counts.
std::string to_pgm(const RasterGrid& grid);
/// CSV with header re,im; finite points only, 17 significant digits.
std::string to_csv(const PointCloud& cloud);

void write_file(const std::string& path, const std::string& bytes);

/// How well occupied cells trace the real segment [a, b] clipped to the
/// window: coverage counts columns with an occupied cell within one pixel of
/// the axis; stray counts occupied cells more than one pixel from it.
struct SegmentBand {
  std::size_t columns = 0;
  std::size_t covered = 0;
  std::size_t stray = 0;
  int max_row_offset = 0;

  double coverage() const { return columns == 0 ? 1.0 : static_cast<double>(covered) / static_cast<double>(columns); }
  bool traces() const { return covered == columns && stray == 0; }
};

SegmentBand segment_band(const RasterGrid& grid, double a, double b);

}  // namespace ratsemi
