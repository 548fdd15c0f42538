#include "ratsemi/algebra.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace ratsemi {

std::string_view to_string(Parity p) {
  switch (p) {
    case Parity::Even:
      return "Even";
    case Parity::Odd:
      return "Odd";
    case Parity::Neither:
      return "Neither";
  }
  return "?";
}

Parity parity(const RationalMap& f) {
  const RationalMap r = f.reflect();
  if (equals(r, f)) return Parity::Even;
  if (equals(r, -f)) return Parity::Odd;
  return Parity::Neither;
}

namespace {

Polynomial halve_exponents(const Polynomial& p) {
  std::vector<GaussianRational> out;
  for (int k = 0; k <= p.degree(); ++k) {
    const GaussianRational& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (k % 2 == 1) {
      if (!c.is_zero()) throw std::domain_error("even map has odd-power coefficient in lowest terms");
      continue;
    }
    out.push_back(c);
  }
  return Polynomial(std::move(out));
}

}  // namespace

RationalMap even_decompose(const RationalMap& g) {
  if (parity(g) != Parity::Even) throw std::domain_error("even_decompose requires an Even map, got " + g.to_string());
  return RationalMap::normalize(halve_exponents(g.num()), halve_exponents(g.den()));
}

RationalMap square_map() { return RationalMap::from_polynomial(Polynomial::monomial(GaussianRational(1), 2)); }

RationalMap conjugate(const RationalMap& f, const MoebiusMap& m) {
  return compose(m.as_map(), compose(f, m.inverse().as_map()));
}

namespace {

using Rq = Rational;

std::array<GaussianRational, 20> commutation_candidates() {
  auto gq = [](long re, long im = 0) { return GaussianRational(Rq(re), Rq(im)); };
  return {gq(0),     gq(1),      gq(-1),      gq(2),      gq(-2),
          gq(3),     gq(0, 1),   gq(0, -1),   gq(-3),     gq(1, 1),
          gq(1, -1), gq(-1, 1),  gq(-1, -1),  gq(0, 2),   gq(0, -2),
          GaussianRational(Rq(1, 2)), GaussianRational(Rq(-1, 2)), gq(4), gq(2, 1),
          GaussianRational(Rq(1, 3))};
}

// Moebius sending (p1, p2, p3) to (0, 1, inf) as a coefficient quadruple.
std::array<GaussianRational, 4> cross_ratio_matrix(const std::array<GaussianRational, 3>& p) {
  const GaussianRational s = p[1] - p[2];
  const GaussianRational t = p[1] - p[0];
  return {s, -(p[0] * s), t, -(p[2] * t)};
}

}  // namespace

std::optional<MoebiusMap> find_commutation_moebius(const RationalMap& f, const RationalMap& g) {
  const RationalMap fg = compose(f, g);
  const RationalMap gf = compose(g, f);

  std::array<GaussianRational, 3> src;
  std::array<GaussianRational, 3> dst;
  std::size_t found = 0;
  for (const GaussianRational& z : commutation_candidates()) {
    const ExtendedGaussian w = gf.evaluate(z);
    const ExtendedGaussian v = fg.evaluate(z);
    if (w.infinite || v.infinite) continue;
    bool collides = false;
    for (std::size_t k = 0; k < found; ++k) collides = collides || src[k] == w.value;
    if (collides) continue;
    src[found] = w.value;
    dst[found] = v.value;
    if (++found == 3) break;
  }
  if (found < 3) return std::nullopt;

  // φ = T_dst⁻¹ ∘ T_src where T sends a triple to (0, 1, ∞).
  const auto ts = cross_ratio_matrix(src);
  const auto td = cross_ratio_matrix(dst);
  std::optional<MoebiusMap> phi;
  try {
    const MoebiusMap t_src(ts[0], ts[1], ts[2], ts[3]);
    const MoebiusMap t_dst(td[0], td[1], td[2], td[3]);
    phi = compose(t_dst.inverse(), t_src);
  } catch (const std::domain_error&) {
    // Colliding destination points: no injective map fits.
    return std::nullopt;
  }
  if (!equals(fg, compose(phi->as_map(), gf))) return std::nullopt;
  return phi;
}

}  // namespace ratsemi
