#include "kernel_impl.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace ratsemi::kernels::detail {

namespace {

inline void horner2(PolyView p, float64x2_t xr, float64x2_t xi, float64x2_t& out_r, float64x2_t& out_i) {
  float64x2_t ar = vdupq_n_f64(0.0);
  float64x2_t ai = vdupq_n_f64(0.0);
  for (size_t j = p.len; j-- > 0;) {
    const float64x2_t cr = vdupq_n_f64(p.re[j]);
    const float64x2_t ci = vdupq_n_f64(p.im[j]);
    // Separate multiply and add: vfmaq would round differently from scalar.
    const float64x2_t tr = vaddq_f64(vsubq_f64(vmulq_f64(ar, xr), vmulq_f64(ai, xi)), cr);
    const float64x2_t ti = vaddq_f64(vaddq_f64(vmulq_f64(ar, xi), vmulq_f64(ai, xr)), ci);
    ar = tr;
    ai = ti;
  }
  out_r = ar;
  out_i = ai;
}

}  // namespace

void eval_rational_neon(PolyView num, PolyView den, const double* zr, const double* zi, size_t n, double* out_re,
                        double* out_im, uint8_t* bad) {
  const float64x2_t zero = vdupq_n_f64(0.0);
  size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const float64x2_t xr = vld1q_f64(zr + k);
    const float64x2_t xi = vld1q_f64(zi + k);
    float64x2_t nr, ni, dr, di;
    horner2(num, xr, xi, nr, ni);
    horner2(den, xr, xi, dr, di);
    const float64x2_t d2 = vaddq_f64(vmulq_f64(dr, dr), vmulq_f64(di, di));
    const float64x2_t re = vdivq_f64(vaddq_f64(vmulq_f64(nr, dr), vmulq_f64(ni, di)), d2);
    const float64x2_t im = vdivq_f64(vsubq_f64(vmulq_f64(ni, dr), vmulq_f64(nr, di)), d2);
    vst1q_f64(out_re + k, re);
    vst1q_f64(out_im + k, im);
    const uint64x2_t finite = vandq_u64(vceqq_f64(vsubq_f64(re, re), zero), vceqq_f64(vsubq_f64(im, im), zero));
    const uint64x2_t ok = vbicq_u64(finite, vceqq_f64(d2, zero));
    bad[k] = vgetq_lane_u64(ok, 0) ? 0 : 1;
    bad[k + 1] = vgetq_lane_u64(ok, 1) ? 0 : 1;
  }
  if (k < n) eval_rational_scalar(num, den, zr + k, zi + k, n - k, out_re + k, out_im + k, bad + k);
}

double min_sq_dist3_neon(const double* xs, const double* ys, const double* zs, size_t n, double qx, double qy,
                         double qz) {
  const float64x2_t vx = vdupq_n_f64(qx);
  const float64x2_t vy = vdupq_n_f64(qy);
  const float64x2_t vz = vdupq_n_f64(qz);
  float64x2_t best = vdupq_n_f64(__builtin_inf());
  size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const float64x2_t dx = vsubq_f64(vld1q_f64(xs + k), vx);
    const float64x2_t dy = vsubq_f64(vld1q_f64(ys + k), vy);
    const float64x2_t dz = vsubq_f64(vld1q_f64(zs + k), vz);
    const float64x2_t s = vaddq_f64(vaddq_f64(vmulq_f64(dx, dx), vmulq_f64(dy, dy)), vmulq_f64(dz, dz));
    best = vminq_f64(s, best);
  }
  double m = vgetq_lane_f64(best, 0);
  const double other = vgetq_lane_f64(best, 1);
  m = other < m ? other : m;
  if (k < n) {
    const double tail = min_sq_dist3_scalar(xs + k, ys + k, zs + k, n - k, qx, qy, qz);
    m = tail < m ? tail : m;
  }
  return m;
}

}  // namespace ratsemi::kernels::detail

#endif
