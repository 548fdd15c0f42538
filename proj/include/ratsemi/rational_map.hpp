#pragma once

#include <string>

#include "ratsemi/polynomial.hpp"

namespace ratsemi {

/// A Gaussian rational or the point at infinity.
struct ExtendedGaussian {
  bool infinite = false;
  GaussianRational value;

  static ExtendedGaussian infinity() { return {true, {}}; }
  static ExtendedGaussian finite(GaussianRational v) { return {false, std::move(v)}; }

  friend bool operator==(const ExtendedGaussian& a, const ExtendedGaussian& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  std::string to_string() const { return infinite ? "inf" : value.to_string(); }
};

/// Map of the Riemann sphere num/den in canonical form: num and den coprime,
/// den monic (so a polynomial map has den == 1). Two maps are equal exactly
/// when their canonical forms agree coefficient-wise.
class RationalMap {
 public:
  /// The identity map z.
  RationalMap();

  /// Cancels the polynomial GCD and makes den monic. Throws std::domain_error
  /// when den is zero.
  static RationalMap normalize(Polynomial num, Polynomial den);
  static RationalMap from_polynomial(Polynomial p);
  static RationalMap constant(GaussianRational c);
  static RationalMap identity() { return {}; }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  /// max(deg num, deg den); 0 for constants.
  int degree() const;

  /// Projective evaluation.
  ExtendedGaussian evaluate(const ExtendedGaussian& z) const;
  ExtendedGaussian evaluate(const GaussianRational& z) const { return evaluate(ExtendedGaussian::finite(z)); }

  RationalMap operator-() const;
  /// z -> f(-z)
  RationalMap reflect() const;

  /// Canonical expression text, e.g. "(5*z^2+3*z)/(4*z^2+3*z+1)" or "2*z^2-1".
  std::string to_string() const;

  friend bool operator==(const RationalMap& a, const RationalMap& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalMap& a, const RationalMap& b) { return !(a == b); }

 private:
  RationalMap(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {}
  Polynomial num_;
  Polynomial den_;
};

/// outer ∘ inner, normalized.
RationalMap compose(const RationalMap& outer, const RationalMap& inner);

/// Exact identity num_f·den_g == num_g·den_f.
bool equals(const RationalMap& f, const RationalMap& g);

/// Pointwise product f·g (not composition).
RationalMap product(const RationalMap& f, const RationalMap& g);

/// Pointwise sum f + g.
RationalMap sum(const RationalMap& f, const RationalMap& g);

/// φ(z) = (z²−1)/(z²+1), the two-to-one link between the real line and [−1,1].
RationalMap halfplane_link();

}  // namespace ratsemi
