#include "ratsemi/numeric_map.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ratsemi {

namespace {

std::vector<cplx> to_complex(const Polynomial& p) {
  std::vector<cplx> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.to_complex());
  return out;
}

kernels::SplitPoly split(const std::vector<cplx>& c) {
  kernels::SplitPoly s;
  for (const cplx& x : c) {
    s.re.push_back(x.real());
    s.im.push_back(x.imag());
  }
  return s;
}

cplx horner(const std::vector<cplx>& c, cplx z) {
  cplx acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

// Sum c_k w^(deg−k): the polynomial read in the 1/z chart.
cplx horner_reversed(const std::vector<cplx>& c, cplx w) {
  cplx acc = 0.0;
  for (const cplx& x : c) acc = acc * w + x;
  return acc;
}

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Leading coefficients below this fraction of the largest are treated as
// cancelled; the lost roots sit beyond ~1e13 and are reported as ∞.
constexpr double kCancelledLead = 1e-13;

}  // namespace

NumericMap::NumericMap(const RationalMap& f)
    : exact_(f),
      degree_(f.degree()),
      deg_num_(f.num().degree()),
      deg_den_(f.den().degree()),
      num_(to_complex(f.num())),
      den_(to_complex(f.den())),
      num_split_(split(num_)),
      den_split_(split(den_)) {
  // Keeps |num|, |den| and their squares far from overflow in the kernel.
  direct_radius_ = std::pow(10.0, 80.0 / std::max(1, degree_));
}

SpherePoint NumericMap::evaluate_slow(cplx z) const {
  if (horner(den_, z) == cplx(0.0)) return SpherePoint::infinity();
  const cplx w = 1.0 / z;
  const cplx p = num_.empty() ? cplx(0.0) : horner_reversed(num_, w);
  const cplx q = horner_reversed(den_, w);
  if (q == cplx(0.0)) return SpherePoint::infinity();
  const int excess = std::max(deg_num_, 0) - deg_den_;
  cplx value = p / q;
  if (excess > 0) value *= std::pow(z, excess);
  if (excess < 0) value *= std::pow(w, -excess);
  if (!finite(value)) return SpherePoint::infinity();
  return SpherePoint::finite(value);
}

SpherePoint NumericMap::evaluate(const SpherePoint& p) const {
  if (p.infinite) {
    if (deg_num_ > deg_den_) return SpherePoint::infinity();
    if (deg_num_ < deg_den_) return SpherePoint::finite(0.0);
    return SpherePoint::finite(num_.back() / den_.back());
  }
  if (!(std::abs(p.z) <= direct_radius_)) return evaluate_slow(p.z);
  double re = 0.0, im = 0.0;
  std::uint8_t bad = 0;
  const double zr = p.z.real(), zi = p.z.imag();
  kernels::eval_rational(kernels::Isa::Scalar, num_split_, den_split_, {&zr, 1}, {&zi, 1}, {&re, 1}, {&im, 1},
                         {&bad, 1});
  if (bad) return evaluate_slow(p.z);
  return SpherePoint::finite({re, im});
}

void NumericMap::evaluate_batch(std::span<const SpherePoint> in, std::span<SpherePoint> out) const {
  std::vector<std::size_t> direct;
  std::vector<double> zr, zi;
  direct.reserve(in.size());
  zr.reserve(in.size());
  zi.reserve(in.size());
  for (std::size_t k = 0; k < in.size(); ++k) {
    if (!in[k].infinite && std::abs(in[k].z) <= direct_radius_) {
      direct.push_back(k);
      zr.push_back(in[k].z.real());
      zi.push_back(in[k].z.imag());
    } else {
      out[k] = evaluate(in[k]);
    }
  }
  std::vector<double> re(direct.size()), im(direct.size());
  std::vector<std::uint8_t> bad(direct.size());
  kernels::eval_rational(num_split_, den_split_, zr, zi, re, im, bad);
  for (std::size_t j = 0; j < direct.size(); ++j) {
    const std::size_t k = direct[j];
    out[k] = bad[j] ? evaluate_slow(in[k].z) : SpherePoint::finite({re[j], im[j]});
  }
}

std::vector<SpherePoint> NumericMap::preimages(const SpherePoint& w, double tol) const {
  std::vector<SpherePoint> out;
  out.reserve(static_cast<std::size_t>(degree_));
  std::vector<cplx> poly;
  if (w.infinite) {
    poly = den_;
  } else {
    poly.assign(static_cast<std::size_t>(std::max(deg_num_, deg_den_)) + 1, cplx(0.0));
    for (std::size_t k = 0; k < num_.size(); ++k) poly[k] += num_[k];
    for (std::size_t k = 0; k < den_.size(); ++k) poly[k] -= w.z * den_[k];
    double scale = 0.0;
    for (const cplx& c : poly) scale = std::max(scale, std::abs(c));
    while (!poly.empty() && std::abs(poly.back()) <= kCancelledLead * scale) poly.pop_back();
  }
  if (poly.size() > 1) {
    for (const cplx& z : polynomial_roots(poly)) out.push_back(SpherePoint::finite(z));
  }
  while (static_cast<int>(out.size()) < degree_) out.push_back(SpherePoint::infinity());

  for (const SpherePoint& z : out) {
    if (z.infinite) continue;
    const double residual = spherical_dist(evaluate(z), w);
    if (!(residual <= tol)) {
      throw RootSolverError("preimage residual " + std::to_string(residual) + " exceeds tolerance", residual);
    }
  }
  return out;
}

cplx NumericMap::derivative(cplx z) const {
  cplx n, dn, d, dd;
  if (num_.empty()) return 0.0;
  horner_with_derivative(num_, z, n, dn);
  horner_with_derivative(den_, z, d, dd);
  return (dn * d - n * dd) / (d * d);
}

}  // namespace ratsemi
