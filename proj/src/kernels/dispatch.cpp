#include <atomic>
#include <stdexcept>
#include <string>

#include "kernel_impl.hpp"
#include "ratsemi/kernels.hpp"

namespace ratsemi::kernels {

namespace {

constexpr int kNoForce = -1;
std::atomic<int> forced{kNoForce};

Isa detect() {
#if defined(__x86_64__) || defined(_M_X64)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return Isa::Avx2;
#elif defined(__aarch64__)
  return Isa::Neon;
#endif
  return Isa::Scalar;
}

detail::PolyView view(const SplitPoly& p) { return {p.re.data(), p.im.data(), p.re.size()}; }

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
  }
  return "?";
}

bool available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
      return detect() == Isa::Avx2;
    case Isa::Neon:
      return detect() == Isa::Neon;
  }
  return false;
}

Isa active() {
  const int f = forced.load(std::memory_order_relaxed);
  if (f != kNoForce) return static_cast<Isa>(f);
  static const Isa best = detect();
  return best;
}

void force(Isa isa) {
  if (!available(isa)) throw std::invalid_argument("kernel variant not available: " + std::string(to_string(isa)));
  forced.store(static_cast<int>(isa), std::memory_order_relaxed);
}

void clear_force() { forced.store(kNoForce, std::memory_order_relaxed); }

void eval_rational(Isa isa, const SplitPoly& num, const SplitPoly& den, std::span<const double> zr,
                   std::span<const double> zi, std::span<double> out_re, std::span<double> out_im,
                   std::span<std::uint8_t> bad) {
  const std::size_t n = zr.size();
  if (zi.size() != n || out_re.size() != n || out_im.size() != n || bad.size() != n) {
    throw std::invalid_argument("eval_rational: span sizes differ");
  }
  switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
    case Isa::Avx2:
      detail::eval_rational_avx2(view(num), view(den), zr.data(), zi.data(), n, out_re.data(), out_im.data(),
                                 bad.data());
      return;
#endif
#if defined(__aarch64__)
    case Isa::Neon:
      detail::eval_rational_neon(view(num), view(den), zr.data(), zi.data(), n, out_re.data(), out_im.data(),
                                 bad.data());
      return;
#endif
    default:
      detail::eval_rational_scalar(view(num), view(den), zr.data(), zi.data(), n, out_re.data(), out_im.data(),
                                   bad.data());
  }
}

void eval_rational(const SplitPoly& num, const SplitPoly& den, std::span<const double> zr, std::span<const double> zi,
                   std::span<double> out_re, std::span<double> out_im, std::span<std::uint8_t> bad) {
  eval_rational(active(), num, den, zr, zi, out_re, out_im, bad);
}

double min_sq_dist3(Isa isa, std::span<const double> xs, std::span<const double> ys, std::span<const double> zs,
                    double qx, double qy, double qz) {
  switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
    case Isa::Avx2:
      return detail::min_sq_dist3_avx2(xs.data(), ys.data(), zs.data(), xs.size(), qx, qy, qz);
#endif
#if defined(__aarch64__)
    case Isa::Neon:
      return detail::min_sq_dist3_neon(xs.data(), ys.data(), zs.data(), xs.size(), qx, qy, qz);
#endif
    default:
      return detail::min_sq_dist3_scalar(xs.data(), ys.data(), zs.data(), xs.size(), qx, qy, qz);
  }
}

double min_sq_dist3(std::span<const double> xs, std::span<const double> ys, std::span<const double> zs, double qx,
                    double qy, double qz) {
  return min_sq_dist3(active(), xs, ys, zs, qx, qy, qz);
}

}  // namespace ratsemi::kernels
