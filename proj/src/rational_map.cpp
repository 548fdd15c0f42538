#include "ratsemi/rational_map.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace ratsemi {

RationalMap::RationalMap() : num_(Polynomial::z()), den_(Polynomial::constant(GaussianRational(1))) {}

RationalMap RationalMap::normalize(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw std::domain_error("rational map with zero denominator");
  if (num.is_zero()) return {Polynomial{}, Polynomial::constant(GaussianRational(1))};
  const Polynomial g = poly_gcd(num, den);
  if (g.degree() > 0) {
    num = num.divmod(g).first;
    den = den.divmod(g).first;
  }
  if (!den.leading().is_one()) {
    const GaussianRational inv = GaussianRational(1) / den.leading();
    num *= inv;
    den *= inv;
  }
  return {std::move(num), std::move(den)};
}

RationalMap RationalMap::from_polynomial(Polynomial p) {
  return {std::move(p), Polynomial::constant(GaussianRational(1))};
}

RationalMap RationalMap::constant(GaussianRational c) { return from_polynomial(Polynomial::constant(std::move(c))); }

int RationalMap::degree() const { return std::max({num_.degree(), den_.degree(), 0}); }

ExtendedGaussian RationalMap::evaluate(const ExtendedGaussian& z) const {
  if (z.infinite) {
    if (num_.degree() > den_.degree()) return ExtendedGaussian::infinity();
    if (num_.degree() < den_.degree()) return ExtendedGaussian::finite(GaussianRational(0));
    return ExtendedGaussian::finite(num_.leading() / den_.leading());
  }
  GaussianRational d = den_.evaluate(z.value);
  if (d.is_zero()) return ExtendedGaussian::infinity();
  return ExtendedGaussian::finite(num_.evaluate(z.value) / d);
}

RationalMap RationalMap::operator-() const { return {-num_, den_}; }

RationalMap RationalMap::reflect() const { return normalize(num_.reflect(), den_.reflect()); }

namespace {

bool single_term(const Polynomial& p) {
  int terms = 0;
  for (const auto& c : p.coeffs()) terms += c.is_zero() ? 0 : 1;
  return terms <= 1;
}

}  // namespace

std::string RationalMap::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  std::string n = num_.to_string();
  std::string d = den_.to_string();
  if (!single_term(num_)) n = "(" + n + ")";
  if (!single_term(den_)) d = "(" + d + ")";
  return n + "/" + d;
}

RationalMap compose(const RationalMap& outer, const RationalMap& inner) {
  const int d = outer.degree();
  const Polynomial& p = inner.num();
  const Polynomial& q = inner.den();
  std::vector<Polynomial> ppow(static_cast<std::size_t>(d) + 1);
  std::vector<Polynomial> qpow(static_cast<std::size_t>(d) + 1);
  ppow[0] = qpow[0] = Polynomial::constant(GaussianRational(1));
  for (int k = 1; k <= d; ++k) {
    ppow[static_cast<std::size_t>(k)] = ppow[static_cast<std::size_t>(k - 1)] * p;
    qpow[static_cast<std::size_t>(k)] = qpow[static_cast<std::size_t>(k - 1)] * q;
  }
  // Homogenize outer at the inner fraction: sum c_k p^k q^(d-k).
  auto homogenize = [&](const Polynomial& poly) {
    Polynomial acc;
    for (int k = 0; k <= poly.degree(); ++k) {
      const GaussianRational& c = poly.coeffs()[static_cast<std::size_t>(k)];
      if (c.is_zero()) continue;
      acc += (ppow[static_cast<std::size_t>(k)] * qpow[static_cast<std::size_t>(d - k)]) * c;
    }
    return acc;
  };
  return RationalMap::normalize(homogenize(outer.num()), homogenize(outer.den()));
}

bool equals(const RationalMap& f, const RationalMap& g) { return f.num() * g.den() == g.num() * f.den(); }

RationalMap product(const RationalMap& f, const RationalMap& g) {
  return RationalMap::normalize(f.num() * g.num(), f.den() * g.den());
}

RationalMap sum(const RationalMap& f, const RationalMap& g) {
  return RationalMap::normalize(f.num() * g.den() + g.num() * f.den(), f.den() * g.den());
}

RationalMap halfplane_link() {
  const GaussianRational one(1);
  return RationalMap::normalize(Polynomial{-one, 0, one}, Polynomial{one, 0, one});
}

}  // namespace ratsemi
