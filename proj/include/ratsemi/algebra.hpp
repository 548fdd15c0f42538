#pragma once

#include <optional>
#include <string_view>

#include "ratsemi/moebius.hpp"
#include "ratsemi/rational_map.hpp"

namespace ratsemi {

enum class Parity { Even, Odd, Neither };

std::string_view to_string(Parity p);

/// Even iff f(−z) = f(z), Odd iff f(−z) = −f(z), both checked exactly.
/// The zero map is reported Even.
Parity parity(const RationalMap& f);

/// For even g returns h with h(z²) = g(z). In lowest terms both num and den
/// of an even map are even polynomials; any nonzero odd-index coefficient is
/// reported as std::domain_error, as is a non-even input.
RationalMap even_decompose(const RationalMap& g);

/// z ↦ z²
RationalMap square_map();

/// m ∘ f ∘ m⁻¹
RationalMap conjugate(const RationalMap& f, const MoebiusMap& m);

/// Searches for a Moebius φ with f∘g = φ∘g∘f. Interpolates φ through three
/// sample points taken from a fixed list (at most 20 candidates) and then
/// checks the identity exactly; returns nullopt when no such φ exists.
std::optional<MoebiusMap> find_commutation_moebius(const RationalMap& f, const RationalMap& g);

}  // namespace ratsemi
