#include "ratsemi/moebius.hpp"

#include <stdexcept>

namespace ratsemi {

MoebiusMap::MoebiusMap(GaussianRational a, GaussianRational b, GaussianRational c, GaussianRational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if ((a_ * d_ - b_ * c_).is_zero()) throw std::domain_error("degenerate Moebius map (ad - bc = 0)");
  const GaussianRational* first = &a_;
  for (const GaussianRational* e : {&a_, &b_, &c_, &d_}) {
    if (!e->is_zero()) {
      first = e;
      break;
    }
  }
  if (!first->is_one()) {
    const GaussianRational inv = GaussianRational(1) / *first;
    a_ *= inv;
    b_ *= inv;
    c_ *= inv;
    d_ *= inv;
  }
}

MoebiusMap MoebiusMap::from_map(const RationalMap& f) {
  if (f.degree() != 1) throw std::domain_error("not a Moebius map: " + f.to_string());
  return {f.num().coeff(1), f.num().coeff(0), f.den().coeff(1), f.den().coeff(0)};
}

RationalMap MoebiusMap::as_map() const {
  return RationalMap::normalize(Polynomial{b_, a_}, Polynomial{d_, c_});
}

MoebiusMap compose(const MoebiusMap& x, const MoebiusMap& y) {
  return {x.a() * y.a() + x.b() * y.c(), x.a() * y.b() + x.b() * y.d(), x.c() * y.a() + x.d() * y.c(),
          x.c() * y.b() + x.d() * y.d()};
}

}  // namespace ratsemi
