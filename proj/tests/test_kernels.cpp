#include "doctest.h"

#include <bit>
#include <complex>
#include <stdexcept>
#include <cmath>
#include <limits>
#include <random>

#include "ratsemi/kernels.hpp"

using namespace ratsemi;
using namespace ratsemi::kernels;

namespace {

std::vector<Isa> variants() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
    if (available(isa)) out.push_back(isa);
  }
  return out;
}

SplitPoly random_poly(std::mt19937_64& rng, int deg) {
  std::normal_distribution<double> d(0.0, 3.0);
  SplitPoly p;
  for (int k = 0; k <= deg; ++k) {
    p.re.push_back(d(rng));
    p.im.push_back(k % 3 == 0 ? 0.0 : d(rng));
  }
  return p;
}

bool same_bits(double a, double b) { return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b); }

}  // namespace

TEST_CASE("scalar variant is always available and force/clear work") {
  CHECK(available(Isa::Scalar));
  force(Isa::Scalar);
  CHECK(active() == Isa::Scalar);
  clear_force();
  CHECK(available(active()));
  MESSAGE("active kernel variant: " << to_string(active()));
}

TEST_CASE("rational evaluation agrees bit for bit across variants") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> coord(0.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const SplitPoly num = random_poly(rng, static_cast<int>(rng() % 9));
    const SplitPoly den = random_poly(rng, static_cast<int>(rng() % 9));
    // Odd lengths exercise the tail loops.
    const std::size_t n = 1 + rng() % 37;
    std::vector<double> zr(n), zi(n);
    for (std::size_t k = 0; k < n; ++k) {
      zr[k] = coord(rng);
      zi[k] = coord(rng);
    }
    if (trial % 5 == 0) zr[0] = zi[0] = 0.0;

    std::vector<double> ref_re(n), ref_im(n);
    std::vector<std::uint8_t> ref_bad(n);
    eval_rational(Isa::Scalar, num, den, zr, zi, ref_re, ref_im, ref_bad);
    for (Isa isa : variants()) {
      std::vector<double> re(n), im(n);
      std::vector<std::uint8_t> bad(n);
      eval_rational(isa, num, den, zr, zi, re, im, bad);
      for (std::size_t k = 0; k < n; ++k) {
        CHECK(bad[k] == ref_bad[k]);
        if (!ref_bad[k]) {
          CHECK(same_bits(re[k], ref_re[k]));
          CHECK(same_bits(im[k], ref_im[k]));
        }
      }
    }
  }
}

TEST_CASE("rational evaluation matches std::complex and flags poles") {
  // (z² − 1) / (2z)
  const SplitPoly num{{-1.0, 0.0, 1.0}, {0.0, 0.0, 0.0}};
  const SplitPoly den{{0.0, 2.0}, {0.0, 0.0}};
  const std::vector<double> zr{0.0, 3.0, 0.5, 1e200};
  const std::vector<double> zi{0.0, 0.0, -1.5, 0.0};
  for (Isa isa : variants()) {
    std::vector<double> re(4), im(4);
    std::vector<std::uint8_t> bad(4);
    eval_rational(isa, num, den, zr, zi, re, im, bad);
    CHECK(bad[0] == 1);
    CHECK(bad[1] == 0);
    CHECK(re[1] == doctest::Approx(8.0 / 6.0));
    CHECK(im[1] == 0.0);
    const std::complex<double> z(0.5, -1.5);
    const std::complex<double> want = (z * z - 1.0) / (2.0 * z);
    CHECK(re[2] == doctest::Approx(want.real()));
    CHECK(im[2] == doctest::Approx(want.imag()));
    CHECK(bad[3] == 1);
  }
}

TEST_CASE("nearest squared distance agrees across variants and with brute force") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng() % 70;
    std::vector<double> xs(n), ys(n), zs(n);
    for (std::size_t k = 0; k < n; ++k) {
      xs[k] = u(rng);
      ys[k] = u(rng);
      zs[k] = u(rng);
    }
    const double qx = u(rng), qy = u(rng), qz = u(rng);
    double brute = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
      brute = std::min(brute, (xs[k] - qx) * (xs[k] - qx) + (ys[k] - qy) * (ys[k] - qy) + (zs[k] - qz) * (zs[k] - qz));
    }
    for (Isa isa : variants()) CHECK(same_bits(min_sq_dist3(isa, xs, ys, zs, qx, qy, qz), brute));
  }
}

TEST_CASE("mismatched spans are rejected") {
  const SplitPoly p{{1.0}, {0.0}};
  std::vector<double> a(3), b(2);
  std::vector<std::uint8_t> bad(3);
  CHECK_THROWS_AS(eval_rational(p, p, a, b, a, a, bad), std::invalid_argument);
}
