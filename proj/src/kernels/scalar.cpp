#include "kernel_impl.hpp"

#include <cmath>
#include <limits>

namespace ratsemi::kernels::detail {

void eval_rational_scalar(PolyView num, PolyView den, const double* zr, const double* zi, size_t n, double* out_re,
                          double* out_im, uint8_t* bad) {
  for (size_t k = 0; k < n; ++k) {
    const double xr = zr[k];
    const double xi = zi[k];
    double nr = 0.0, ni = 0.0;
    for (size_t j = num.len; j-- > 0;) {
      const double tr = nr * xr - ni * xi + num.re[j];
      const double ti = nr * xi + ni * xr + num.im[j];
      nr = tr;
      ni = ti;
    }
    double dr = 0.0, di = 0.0;
    for (size_t j = den.len; j-- > 0;) {
      const double tr = dr * xr - di * xi + den.re[j];
      const double ti = dr * xi + di * xr + den.im[j];
      dr = tr;
      di = ti;
    }
    const double d2 = dr * dr + di * di;
    const double re = (nr * dr + ni * di) / d2;
    const double im = (ni * dr - nr * di) / d2;
    out_re[k] = re;
    out_im[k] = im;
    bad[k] = (d2 == 0.0 || !std::isfinite(re) || !std::isfinite(im)) ? 1 : 0;
  }
}

double min_sq_dist3_scalar(const double* xs, const double* ys, const double* zs, size_t n, double qx, double qy,
                           double qz) {
  double best = std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < n; ++k) {
    const double dx = xs[k] - qx;
    const double dy = ys[k] - qy;
    const double dz = zs[k] - qz;
    const double s = dx * dx + dy * dy + dz * dz;
    best = s < best ? s : best;
  }
  return best;
}

}  // namespace ratsemi::kernels::detail
