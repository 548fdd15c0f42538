#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ratsemi/gaussian_rational.hpp"

namespace ratsemi {

/// Dense univariate polynomial over the Gaussian rationals, coefficients
/// indexed by power. The highest stored coefficient is always nonzero, so the
/// zero polynomial has no coefficients and degree kZeroDegree.
class Polynomial {
 public:
  static constexpr int kZeroDegree = -1;

  Polynomial() = default;
  explicit Polynomial(std::vector<GaussianRational> coeffs);
  Polynomial(std::initializer_list<GaussianRational> coeffs);

  static Polynomial constant(GaussianRational c);
  /// c * z^k
  static Polynomial monomial(GaussianRational c, int k);
  static Polynomial z() { return monomial(GaussianRational(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
  /// Coefficient of z^k; zero past the degree.
  GaussianRational coeff(int k) const;
  /// Throws std::domain_error for the zero polynomial.
  const GaussianRational& leading() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const GaussianRational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const GaussianRational& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(unsigned k) const;
  Polynomial derivative() const;
  /// p(-z)
  Polynomial reflect() const;
  /// Scales so the leading coefficient is 1. Zero stays zero.
  Polynomial monic() const;

  /// Euclidean division; throws std::domain_error when the divisor is zero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  GaussianRational evaluate(const GaussianRational& z) const;

  /// Descending powers with explicit '*' and '^', e.g. "5*z^2+3*z".
  std::string to_string() const;

 private:
  void trim();
  std::vector<GaussianRational> coeffs_;
};

/// Monic greatest common divisor. Throws std::domain_error("gcd undefined")
/// when both inputs are zero.
Polynomial poly_gcd(const Polynomial& p, const Polynomial& q);

}  // namespace ratsemi
