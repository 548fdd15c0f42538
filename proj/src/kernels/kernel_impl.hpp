#pragma once

// Per-ISA kernel entry points. Kept free of the C++ standard library so the
// NEON translation unit can be syntax-checked on any host.

#include <stddef.h>
#include <stdint.h>

namespace ratsemi::kernels::detail {

/// Complex polynomial, coefficients in ascending powers, split real/imag.
struct PolyView {
  const double* re;
  const double* im;
  size_t len;
};

// Evaluates num(z)/den(z) for n points by complex Horner followed by the
// textbook division formula. bad[k] = 1 when the denominator is exactly zero
// or the quotient is not finite; out values are unspecified in that case.
// All variants perform the same IEEE operations in the same order, so they
// agree bit for bit.
void eval_rational_scalar(PolyView num, PolyView den, const double* zr, const double* zi, size_t n, double* out_re,
                          double* out_im, uint8_t* bad);
void eval_rational_avx2(PolyView num, PolyView den, const double* zr, const double* zi, size_t n, double* out_re,
                        double* out_im, uint8_t* bad);
void eval_rational_neon(PolyView num, PolyView den, const double* zr, const double* zi, size_t n, double* out_re,
                        double* out_im, uint8_t* bad);

// min over k of (x_k−qx)² + (y_k−qy)² + (z_k−qz)²; +inf for n == 0.
double min_sq_dist3_scalar(const double* xs, const double* ys, const double* zs, size_t n, double qx, double qy,
                           double qz);
double min_sq_dist3_avx2(const double* xs, const double* ys, const double* zs, size_t n, double qx, double qy,
                         double qz);
double min_sq_dist3_neon(const double* xs, const double* ys, const double* zs, size_t n, double qx, double qy,
                         double qz);

}  // namespace ratsemi::kernels::detail
