#pragma once

// Data-parallel inner loops with a scalar reference and SIMD variants chosen
// at runtime. Every variant is bit-for-bit equivalent to the scalar one.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace ratsemi::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa);

/// Whether this build and CPU can run the variant.
bool available(Isa isa);

/// The best available variant unless overridden.
Isa active();

/// Forces a variant (tests, benchmarks). Throws std::invalid_argument if it
/// is not available.
void force(Isa isa);
void clear_force();

/// Complex polynomial in split form, ascending powers.
struct SplitPoly {
  std::vector<double> re;
  std::vector<double> im;
};

/// out = num(z)/den(z) for every z; bad[k] set when the denominator is zero
/// or the quotient overflows.
void eval_rational(const SplitPoly& num, const SplitPoly& den, std::span<const double> zr, std::span<const double> zi,
                   std::span<double> out_re, std::span<double> out_im, std::span<std::uint8_t> bad);
void eval_rational(Isa isa, const SplitPoly& num, const SplitPoly& den, std::span<const double> zr,
                   std::span<const double> zi, std::span<double> out_re, std::span<double> out_im,
                   std::span<std::uint8_t> bad);

/// Smallest squared Euclidean distance from q to the points (xs, ys, zs).
double min_sq_dist3(std::span<const double> xs, std::span<const double> ys, std::span<const double> zs, double qx,
                    double qy, double qz);
double min_sq_dist3(Isa isa, std::span<const double> xs, std::span<const double> ys, std::span<const double> zs,
                    double qx, double qy, double qz);

}  // namespace ratsemi::kernels
