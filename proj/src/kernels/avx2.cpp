#include "kernel_impl.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace ratsemi::kernels::detail {

namespace {

inline void horner4(PolyView p, __m256d xr, __m256d xi, __m256d& out_r, __m256d& out_i) {
  __m256d ar = _mm256_setzero_pd();
  __m256d ai = _mm256_setzero_pd();
  for (size_t j = p.len; j-- > 0;) {
    const __m256d cr = _mm256_set1_pd(p.re[j]);
    const __m256d ci = _mm256_set1_pd(p.im[j]);
    const __m256d tr = _mm256_add_pd(_mm256_sub_pd(_mm256_mul_pd(ar, xr), _mm256_mul_pd(ai, xi)), cr);
    const __m256d ti = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(ar, xi), _mm256_mul_pd(ai, xr)), ci);
    ar = tr;
    ai = ti;
  }
  out_r = ar;
  out_i = ai;
}

}  // namespace

void eval_rational_avx2(PolyView num, PolyView den, const double* zr, const double* zi, size_t n, double* out_re,
                        double* out_im, uint8_t* bad) {
  const __m256d zero = _mm256_setzero_pd();
  size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d xr = _mm256_loadu_pd(zr + k);
    const __m256d xi = _mm256_loadu_pd(zi + k);
    __m256d nr, ni, dr, di;
    horner4(num, xr, xi, nr, ni);
    horner4(den, xr, xi, dr, di);
    const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dr, dr), _mm256_mul_pd(di, di));
    const __m256d re = _mm256_div_pd(_mm256_add_pd(_mm256_mul_pd(nr, dr), _mm256_mul_pd(ni, di)), d2);
    const __m256d im = _mm256_div_pd(_mm256_sub_pd(_mm256_mul_pd(ni, dr), _mm256_mul_pd(nr, di)), d2);
    _mm256_storeu_pd(out_re + k, re);
    _mm256_storeu_pd(out_im + k, im);
    // x − x is 0 exactly when x is finite.
    const __m256d finite = _mm256_and_pd(_mm256_cmp_pd(_mm256_sub_pd(re, re), zero, _CMP_EQ_OQ),
                                         _mm256_cmp_pd(_mm256_sub_pd(im, im), zero, _CMP_EQ_OQ));
    const __m256d ok = _mm256_andnot_pd(_mm256_cmp_pd(d2, zero, _CMP_EQ_OQ), finite);
    const int mask = _mm256_movemask_pd(ok);
    for (int lane = 0; lane < 4; ++lane) bad[k + static_cast<size_t>(lane)] = ((mask >> lane) & 1) ? 0 : 1;
  }
  if (k < n) eval_rational_scalar(num, den, zr + k, zi + k, n - k, out_re + k, out_im + k, bad + k);
}

double min_sq_dist3_avx2(const double* xs, const double* ys, const double* zs, size_t n, double qx, double qy,
                         double qz) {
  const __m256d vx = _mm256_set1_pd(qx);
  const __m256d vy = _mm256_set1_pd(qy);
  const __m256d vz = _mm256_set1_pd(qz);
  __m256d best = _mm256_set1_pd(__builtin_inf());
  size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + k), vx);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + k), vy);
    const __m256d dz = _mm256_sub_pd(_mm256_loadu_pd(zs + k), vz);
    const __m256d s =
        _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)), _mm256_mul_pd(dz, dz));
    best = _mm256_min_pd(s, best);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double m = lanes[0];
  for (int lane = 1; lane < 4; ++lane) m = lanes[lane] < m ? lanes[lane] : m;
  if (k < n) {
    const double tail = min_sq_dist3_scalar(xs + k, ys + k, zs + k, n - k, qx, qy, qz);
    m = tail < m ? tail : m;
  }
  return m;
}

}  // namespace ratsemi::kernels::detail

#endif
