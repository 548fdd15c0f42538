#include "ratsemi/raster.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace ratsemi {

namespace {

int cell_index(double offset, double extent, int cells) {
  const auto k = static_cast<int>(std::floor(offset / extent * cells));
  return std::clamp(k, 0, cells - 1);
}

}  // namespace

RasterGrid::RasterGrid(const Window& w, const Resolution& r) : window(w), resolution(r) {
  if (r.w < 1 || r.h < 1) throw std::invalid_argument("resolution must be positive");
  cells.assign(static_cast<std::size_t>(r.w) * static_cast<std::size_t>(r.h), 0);
}

std::optional<std::pair<int, int>> RasterGrid::locate(cplx z) const {
  const double x = z.real(), y = z.imag();
  if (!(x >= window.left() && x <= window.right() && y >= window.bottom() && y <= window.top())) return std::nullopt;
  const int col = cell_index(x - window.left(), window.width, resolution.w);
  const int row = cell_index(window.top() - y, window.height, resolution.h);
  return std::make_pair(row, col);
}

bool RasterGrid::add(const SpherePoint& p) {
  if (!p.infinite) {
    if (auto rc = locate(p.z)) {
      ++at(rc->first, rc->second);
      return true;
    }
  }
  ++overflow;
  return false;
}

std::size_t RasterGrid::occupied() const {
  return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](std::uint64_t c) { return c > 0; }));
}

std::vector<int> RasterGrid::axis_rows() const {
  std::vector<int> rows;
  if (!(window.bottom() <= 0.0 && 0.0 <= window.top())) return rows;
  // Probe just above and below the axis so a row boundary on y = 0 yields both rows.
  const double eps = window.height * 1e-9;
  for (double y : {eps, -eps}) {
    const double yy = std::clamp(y, window.bottom(), window.top());
    const int row = cell_index(window.top() - yy, window.height, resolution.h);
    if (std::find(rows.begin(), rows.end(), row) == rows.end()) rows.push_back(row);
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

RasterGrid rasterize(const PointCloud& cloud, const Window& window, const Resolution& resolution) {
  RasterGrid grid(window, resolution);
  for (const SpherePoint& p : cloud.points) grid.add(p);
  return grid;
}

std::string to_pgm(const RasterGrid& grid) {
  std::string out =
      "P5\n" + std::to_string(grid.resolution.w) + " " + std::to_string(grid.resolution.h) + "\n255\n";
  const std::uint64_t cmax = grid.cells.empty() ? 0 : *std::max_element(grid.cells.begin(), grid.cells.end());
  const double scale = cmax == 0 ? 0.0 : 255.0 / std::log1p(static_cast<double>(cmax));
  out.reserve(out.size() + grid.cells.size());
  for (std::uint64_t c : grid.cells) {
    const long v = std::lround(scale * std::log1p(static_cast<double>(c)));
    out.push_back(static_cast<char>(static_cast<unsigned char>(std::clamp(v, 0L, 255L))));
  }
  return out;
}

std::string to_csv(const PointCloud& cloud) {
  std::string out = "re,im\n";
  char buf[64];
  for (const SpherePoint& p : cloud.points) {
    if (p.infinite) continue;
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p.z.real(), p.z.imag());
    out += buf;
  }
  return out;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw std::runtime_error("failed writing " + path);
}

SegmentBand segment_band(const RasterGrid& grid, double a, double b) {
  SegmentBand band;
  const std::vector<int> axis = grid.axis_rows();
  const int W = grid.resolution.w, H = grid.resolution.h;
  auto row_offset = [&](int row) {
    if (axis.empty()) return H;
    int best = H;
    for (int r : axis) best = std::min(best, std::abs(row - r));
    return best;
  };

  const double lo = std::max(a, grid.window.left());
  const double hi = std::min(b, grid.window.right());
  const bool hits = !axis.empty() && lo <= hi;
  int c_lo = 0, c_hi = -1;
  if (hits) {
    c_lo = grid.locate({lo, 0.0})->second;
    c_hi = grid.locate({hi, 0.0})->second;
    band.columns = static_cast<std::size_t>(c_hi - c_lo + 1);
  }

  std::vector<bool> near_axis(static_cast<std::size_t>(W), false);
  for (int row = 0; row < H; ++row) {
    const int off = row_offset(row);
    for (int col = 0; col < W; ++col) {
      if (grid.at(row, col) == 0) continue;
      band.max_row_offset = std::max(band.max_row_offset, off);
      const bool in_columns = hits && col >= c_lo - 1 && col <= c_hi + 1;
      if (off > 1 || !in_columns) {
        ++band.stray;
      } else {
        near_axis[static_cast<std::size_t>(col)] = true;
      }
    }
  }
  for (int col = c_lo; col <= c_hi; ++col) {
    bool ok = false;
    for (int c = std::max(0, col - 1); c <= std::min(W - 1, col + 1) && !ok; ++c) ok = near_axis[static_cast<std::size_t>(c)];
    if (ok) ++band.covered;
  }
  return band;
}

}  // namespace ratsemi
