#include "ratsemi/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace ratsemi {

void horner_with_derivative(std::span<const cplx> coeffs, cplx z, cplx& p, cplx& dp) {
  p = 0.0;
  dp = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    dp = dp * z + p;
    p = p * z + coeffs[k];
  }
}

namespace {

constexpr int kMaxSweeps = 500;
constexpr double kResidualScale = 1e-10;

double max_abs(std::span<const cplx> c) {
  double m = 0.0;
  for (const cplx& x : c) m = std::max(m, std::abs(x));
  return m;
}

// Worst residual relative to the acceptance bound; <= 1 means accepted.
double worst_residual_ratio(std::span<const cplx> c, const std::vector<cplx>& roots, double& worst_abs) {
  const double scale = kResidualScale * max_abs(c);
  const int deg = static_cast<int>(c.size()) - 1;
  double worst = 0.0;
  worst_abs = 0.0;
  for (const cplx& z : roots) {
    cplx p, dp;
    horner_with_derivative(c, z, p, dp);
    const double r = std::abs(p);
    const double bound = scale * std::pow(std::max(1.0, std::abs(z)), deg);
    if (!std::isfinite(r)) return INFINITY;
    worst = std::max(worst, r / bound);
    worst_abs = std::max(worst_abs, r);
  }
  return worst;
}

std::vector<cplx> quadratic_roots(const cplx& c0, const cplx& c1, const cplx& c2) {
  const cplx disc = c1 * c1 - 4.0 * c2 * c0;
  const cplx s = std::sqrt(disc);
  const cplx q = (std::real(std::conj(c1) * s) >= 0.0) ? -0.5 * (c1 + s) : -0.5 * (c1 - s);
  if (q == cplx(0.0)) return {cplx(0.0), cplx(0.0)};
  return {q / c2, c0 / q};
}

std::vector<cplx> aberth(std::span<const cplx> c) {
  const std::size_t n = c.size() - 1;
  // Fujiwara bound for the initial circle.
  double radius = 0.0;
  const double lead = std::abs(c[n]);
  for (std::size_t k = 0; k < n; ++k) {
    const double ratio = std::abs(c[k]) / lead;
    const double bound = std::pow(ratio / (k == 0 ? 2.0 : 1.0), 1.0 / static_cast<double>(n - k));
    radius = std::max(radius, bound);
  }
  radius = std::max(2.0 * radius, 1e-3);

  std::vector<cplx> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    z[k] = std::polar(radius, angle);
  }

  std::vector<bool> done(n, false);
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool all_done = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      cplx p, dp;
      horner_with_derivative(c, z[k], p, dp);
      // Stop once |p| is at the rounding floor of the Horner evaluation.
      double floor_bound = 0.0;
      const double az = std::abs(z[k]);
      for (std::size_t j = n + 1; j-- > 0;) floor_bound = floor_bound * az + std::abs(c[j]);
      if (std::abs(p) <= 8.0 * std::numeric_limits<double>::epsilon() * floor_bound) {
        done[k] = true;
        continue;
      }
      cplx repulsion = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k && z[k] != z[j]) repulsion += 1.0 / (z[k] - z[j]);
      }
      cplx step;
      if (dp == cplx(0.0)) {
        step = cplx(1e-8 * (1.0 + std::abs(z[k])), 1e-8);
      } else {
        const cplx ratio = p / dp;
        step = ratio / (1.0 - ratio * repulsion);
      }
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
        step = cplx(1e-8 * (1.0 + std::abs(z[k])), 1e-8);
      }
      z[k] -= step;
      if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(z[k]))) {
        done[k] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
  }
  return z;
}

}  // namespace

std::vector<cplx> polynomial_roots(std::span<const cplx> coeffs) {
  if (coeffs.empty() || coeffs.back() == cplx(0.0)) {
    throw std::invalid_argument("polynomial_roots: zero leading coefficient");
  }
  const std::size_t n = coeffs.size() - 1;
  if (n == 0) return {};

  std::vector<cplx> roots;
  if (n == 1) {
    roots = {-coeffs[0] / coeffs[1]};
  } else if (n == 2) {
    roots = quadratic_roots(coeffs[0], coeffs[1], coeffs[2]);
  } else {
    roots = aberth(coeffs);
  }
  double worst_abs = 0.0;
  if (worst_residual_ratio(coeffs, roots, worst_abs) <= 1.0) return roots;
  if (n <= 2) {
    roots = aberth(coeffs);
    if (worst_residual_ratio(coeffs, roots, worst_abs) <= 1.0) return roots;
  }
  throw RootSolverError("root solver did not converge (degree " + std::to_string(n) + ", residual " +
                            std::to_string(worst_abs) + ")",
                        worst_abs);
}

}  // namespace ratsemi
