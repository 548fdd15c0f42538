#include "ratsemi/gaussian_rational.hpp"

#include <stdexcept>

namespace ratsemi {

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const Rational n = o.norm();
  Rational re = (re_ * o.re_ + im_ * o.im_) / n;
  Rational im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussianRational::to_string() const {
  const int si = sgn(im_);
  if (si == 0) return ratsemi::to_string(re_);
  std::string imag;
  const Rational mag = abs(im_);
  if (mag == 1) {
    imag = "i";
  } else {
    imag = ratsemi::to_string(mag) + "*i";
  }
  if (sgn(re_) == 0) return si < 0 ? "-" + imag : imag;
  return ratsemi::to_string(re_) + (si < 0 ? "-" : "+") + imag;
}

}  // namespace ratsemi
