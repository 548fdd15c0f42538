#pragma once

#include <optional>
#include <vector>

#include "ratsemi/rational_map.hpp"

namespace ratsemi {

struct PolePair {
  Rational A;  // poles at ±√A
  Rational B;  // weight of B z / (z² − A)

  friend bool operator==(const PolePair& x, const PolePair& y) { return x.A == y.A && x.B == y.B; }
};

/// Coefficients of the odd half-plane-preserving normal form
///   f(z) = a z − b/z − Σ B_j z / (z² − A_j),   a, b, A_j, B_j ≥ 0.
/// Pairs are sorted by A with distinct A.
struct HalfPlaneParams {
  Rational a{0};
  Rational b{0};
  std::vector<PolePair> pairs;

  /// Throws std::invalid_argument on a negative entry or unsorted/duplicate A.
  void validate() const;

  friend bool operator==(const HalfPlaneParams& x, const HalfPlaneParams& y) {
    return x.a == y.a && x.b == y.b && x.pairs == y.pairs;
  }
};

/// Builds the normal-form map. Throws std::domain_error("not a semigroup
/// generator") when the result has degree below two.
RationalMap build_from_params(const HalfPlaneParams& p);

/// Partial-fraction recognition of the normal form. Works in w = z² where
/// f(z)/z = R(w) has poles at w = 0 and w = A_j, so any rational A_j is
/// recovered. Returns the canonical parameters (zero-weight pairs dropped,
/// a pole pair at A = 0 merged into b) or nullopt.
std::optional<HalfPlaneParams> recognize_halfplane_form(const RationalMap& f);

/// The upstairs map f̃ with φ∘f = f̃∘φ for φ(z) = (z²−1)/(z²+1). Built from
/// [f]² = h(z²) as f̃ = ψ∘h∘ψ⁻¹ with ψ(w) = (w−1)/(w+1), then checked exactly.
/// Throws std::domain_error for a non-odd f and std::logic_error if the
/// final identity check fails.
RationalMap lift(const RationalMap& f);

/// link∘lower == upper∘link, exactly.
bool verify_semiconjugacy(const RationalMap& lower, const RationalMap& upper, const RationalMap& link);

}  // namespace ratsemi
