#pragma once

#include "ratsemi/rational_map.hpp"

namespace ratsemi::testing {

inline GaussianRational q(long n, long d = 1) { return GaussianRational(Rational(n, d)); }

inline RationalMap ratio(Polynomial num, Polynomial den = Polynomial{q(1)}) {
  return RationalMap::normalize(std::move(num), std::move(den));
}

inline RationalMap odd_f() { return ratio(Polynomial{q(-1), q(0), q(2)}, Polynomial::z()); }          // 2z − 1/z
inline RationalMap odd_g() { return ratio(Polynomial{q(-1), q(0), q(1)}, Polynomial{q(0), q(2)}); }   // (z²−1)/(2z)
inline RationalMap odd_g2() { return ratio(Polynomial{q(-4), q(0), q(2)}, Polynomial::z()); }         // 2z − 4/z
inline RationalMap cheb2() { return ratio(Polynomial{q(-2), q(0), q(1)}); }                           // z² − 2
inline RationalMap cheb2_scaled() { return ratio(Polynomial{q(-2), q(0), q(4)}); }                    // 4z² − 2
inline RationalMap cheb2_unit() { return ratio(Polynomial{q(-1), q(0), q(2)}); }                      // 2z² − 1
inline RationalMap square() { return ratio(Polynomial{q(0), q(0), q(1)}); }                           // z²

}  // namespace ratsemi::testing
