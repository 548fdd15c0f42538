#pragma once

#include <string>

#include "ratsemi/rational_map.hpp"

namespace ratsemi {

/// z ↦ (az+b)/(cz+d) with ad−bc ≠ 0, scaled so the first nonzero entry of
/// (a, b, c, d) is 1.
class MoebiusMap {
 public:
  /// Throws std::domain_error when the determinant vanishes.
  MoebiusMap(GaussianRational a, GaussianRational b, GaussianRational c, GaussianRational d);

  static MoebiusMap identity() { return {1, 0, 0, 1}; }
  static MoebiusMap scaling(GaussianRational k) { return {std::move(k), 0, 0, 1}; }
  static MoebiusMap translation(GaussianRational t) { return {1, std::move(t), 0, 1}; }
  /// Throws std::domain_error unless f has degree exactly one.
  static MoebiusMap from_map(const RationalMap& f);

  const GaussianRational& a() const { return a_; }
  const GaussianRational& b() const { return b_; }
  const GaussianRational& c() const { return c_; }
  const GaussianRational& d() const { return d_; }

  MoebiusMap inverse() const { return {d_, -b_, -c_, a_}; }
  RationalMap as_map() const;
  std::string to_string() const { return as_map().to_string(); }

  friend bool operator==(const MoebiusMap& x, const MoebiusMap& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

 private:
  GaussianRational a_, b_, c_, d_;
};

/// Composition x ∘ y as matrix product.
MoebiusMap compose(const MoebiusMap& x, const MoebiusMap& y);

}  // namespace ratsemi
