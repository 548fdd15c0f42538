#include "ratsemi/halfplane.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ratsemi/algebra.hpp"
#include "ratsemi/roots.hpp"

namespace ratsemi {

void HalfPlaneParams::validate() const {
  if (sgn(a) < 0 || sgn(b) < 0) throw std::invalid_argument("half-plane params: a and b must be >= 0");
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    if (sgn(pairs[j].A) < 0 || sgn(pairs[j].B) < 0) {
      throw std::invalid_argument("half-plane params: A_j and B_j must be >= 0");
    }
    if (j > 0 && !(pairs[j - 1].A < pairs[j].A)) {
      throw std::invalid_argument("half-plane params: pairs must be sorted by strictly increasing A");
    }
  }
}

namespace {

RationalMap build_unchecked(const HalfPlaneParams& p) {
  const GaussianRational one(1);
  RationalMap f = RationalMap::from_polynomial(Polynomial::monomial(GaussianRational(p.a), 1));
  if (sgn(p.b) != 0) {
    f = sum(f, RationalMap::normalize(Polynomial::constant(GaussianRational(Rational(-p.b))), Polynomial::z()));
  }
  for (const PolePair& pp : p.pairs) {
    if (sgn(pp.B) == 0) continue;
    const RationalMap term = RationalMap::normalize(Polynomial::monomial(GaussianRational(Rational(-pp.B)), 1),
                                                    Polynomial{GaussianRational(Rational(-pp.A)), 0, one});
    f = sum(f, term);
  }
  return f;
}

// Exact rational root near x, found among continued-fraction convergents.
std::optional<Rational> recover_rational_root(const Polynomial& poly, double x) {
  if (!std::isfinite(x) || std::abs(x) > 1e15) return std::nullopt;
  mpz_class h_prev = 1, h = static_cast<long>(std::floor(x));
  mpz_class k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  for (int term = 0; term < 48; ++term) {
    Rational candidate(h, k);
    candidate.canonicalize();
    if (poly.evaluate(GaussianRational(candidate)).is_zero()) return candidate;
    if (frac < 1e-300 || k > mpz_class("1000000000000000")) break;
    const double inv = 1.0 / frac;
    const double a_next = std::floor(inv);
    frac = inv - a_next;
    const mpz_class a(a_next);
    mpz_class h_next = a * h + h_prev;
    mpz_class k_next = a * k + k_prev;
    h_prev = std::move(h);
    k_prev = std::move(k);
    h = std::move(h_next);
    k = std::move(k_next);
  }
  return std::nullopt;
}

std::vector<cplx> to_complex(const Polynomial& p) {
  std::vector<cplx> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.to_complex());
  return out;
}

// All roots of p if each is rational; deflates exactly after every hit.
std::optional<std::vector<Rational>> rational_roots(Polynomial p) {
  std::vector<Rational> out;
  while (p.degree() > 0) {
    const std::vector<cplx> c = to_complex(p);
    std::vector<cplx> approx;
    try {
      approx = polynomial_roots(c);
    } catch (const RootSolverError&) {
      return std::nullopt;
    }
    std::optional<Rational> hit;
    for (const cplx& r : approx) {
      if (std::abs(r.imag()) > 1e-6 * std::max(1.0, std::abs(r))) continue;
      hit = recover_rational_root(p, r.real());
      if (hit) break;
    }
    if (!hit) return std::nullopt;
    p = p.divmod(Polynomial{GaussianRational(Rational(-*hit)), GaussianRational(1)}).first;
    out.push_back(*hit);
  }
  return out;
}

}  // namespace

RationalMap build_from_params(const HalfPlaneParams& p) {
  p.validate();
  RationalMap f = build_unchecked(p);
  if (f.degree() < 2) throw std::domain_error("not a semigroup generator: " + f.to_string());
  return f;
}

std::optional<HalfPlaneParams> recognize_halfplane_form(const RationalMap& f) {
  if (parity(f) != Parity::Odd) return std::nullopt;
  // f(z)/z is even, so it equals R(z²).
  const RationalMap over_z = RationalMap::normalize(f.num(), f.den() * Polynomial::z());
  const RationalMap r = even_decompose(over_z);
  const Polynomial& n = r.num();
  const Polynomial& d = r.den();
  if (n.degree() > d.degree()) return std::nullopt;

  // Simple poles only.
  if (poly_gcd(d, d.derivative()).degree() > 0) return std::nullopt;
  for (const auto& c : d.coeffs()) {
    if (!c.is_real()) return std::nullopt;
  }

  HalfPlaneParams params;
  if (n.degree() == d.degree()) {
    const GaussianRational a = n.leading() / d.leading();
    if (!a.is_real() || sgn(a.re()) < 0) return std::nullopt;
    params.a = a.re();
  }
  const auto poles = rational_roots(d);
  if (!poles) return std::nullopt;
  const Polynomial dd = d.derivative();
  for (const Rational& pole : *poles) {
    if (sgn(pole) < 0) return std::nullopt;
    const GaussianRational residue = n.evaluate(GaussianRational(pole)) / dd.evaluate(GaussianRational(pole));
    if (!residue.is_real() || sgn(residue.re()) > 0) return std::nullopt;
    const Rational weight = -residue.re();
    if (sgn(pole) == 0) {
      params.b = weight;
    } else {
      params.pairs.push_back({pole, weight});
    }
  }
  std::sort(params.pairs.begin(), params.pairs.end(),
            [](const PolePair& x, const PolePair& y) { return x.A < y.A; });
  if (!equals(build_unchecked(params), f)) return std::nullopt;
  return params;
}

RationalMap lift(const RationalMap& f) {
  const Parity p = parity(f);
  if (p != Parity::Odd) {
    throw std::domain_error("map is " + std::string(to_string(p)) + ", lift requires Odd");
  }
  const RationalMap h = even_decompose(product(f, f));
  const MoebiusMap psi(1, -1, 1, 1);
  RationalMap lifted = conjugate(h, psi);
  if (!verify_semiconjugacy(f, lifted, halfplane_link())) {
    throw std::logic_error("lift failed its semi-conjugacy check for " + f.to_string());
  }
  return lifted;
}

bool verify_semiconjugacy(const RationalMap& lower, const RationalMap& upper, const RationalMap& link) {
  return equals(compose(link, lower), compose(upper, link));
}

}  // namespace ratsemi
