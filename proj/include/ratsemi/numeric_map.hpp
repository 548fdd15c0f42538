#pragma once

#include <span>
#include <vector>

#include "ratsemi/kernels.hpp"
#include "ratsemi/rational_map.hpp"
#include "ratsemi/roots.hpp"
#include "ratsemi/sphere.hpp"

namespace ratsemi {

inline constexpr double kDefaultPreimageTol = 1e-9;

/// Floating-point view of an exact rational map. Coefficients are converted
/// once; evaluation is projective.
class NumericMap {
 public:
  explicit NumericMap(const RationalMap& f);

  const RationalMap& exact() const { return exact_; }
  int degree() const { return degree_; }

  SpherePoint evaluate(const SpherePoint& p) const;
  /// Same results as evaluate() point by point; the bulk of the work runs
  /// through the SIMD rational-evaluation kernel.
  void evaluate_batch(std::span<const SpherePoint> in, std::span<SpherePoint> out) const;

  /// The degree-many solutions of f(z) = w with multiplicity, ∞ included.
  /// Throws RootSolverError when a finite solution misses w by more than tol
  /// in the chordal metric.
  std::vector<SpherePoint> preimages(const SpherePoint& w, double tol = kDefaultPreimageTol) const;

  /// f′(z) at a finite point.
  cplx derivative(cplx z) const;

 private:
  SpherePoint evaluate_slow(cplx z) const;

  RationalMap exact_;
  int degree_ = 0;
  int deg_num_ = -1;
  int deg_den_ = 0;
  std::vector<cplx> num_;
  std::vector<cplx> den_;
  kernels::SplitPoly num_split_;
  kernels::SplitPoly den_split_;
  double direct_radius_ = 1.0;
};

}  // namespace ratsemi
