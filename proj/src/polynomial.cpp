#include "ratsemi/polynomial.hpp"

#include <stdexcept>

namespace ratsemi {

Polynomial::Polynomial(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<GaussianRational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(GaussianRational c) { return Polynomial(std::vector<GaussianRational>{std::move(c)}); }

Polynomial Polynomial::monomial(GaussianRational c, int k) {
  if (k < 0) throw std::invalid_argument("negative monomial power");
  std::vector<GaussianRational> v(static_cast<std::size_t>(k) + 1);
  v.back() = std::move(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussianRational Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return GaussianRational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

const GaussianRational& Polynomial::leading() const {
  if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(GaussianRational(1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<GaussianRational> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * GaussianRational(static_cast<long>(k));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::reflect() const {
  Polynomial r = *this;
  for (std::size_t k = 1; k < r.coeffs_.size(); k += 2) r.coeffs_[k] = -r.coeffs_[k];
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  const GaussianRational inv = GaussianRational(1) / leading();
  return *this * inv;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (degree() < divisor.degree()) return {Polynomial{}, *this};
  std::vector<GaussianRational> rem = coeffs_;
  const int dd = divisor.degree();
  std::vector<GaussianRational> quot(static_cast<std::size_t>(degree() - dd) + 1);
  const GaussianRational inv_lead = GaussianRational(1) / divisor.leading();
  for (int k = degree(); k >= dd; --k) {
    const GaussianRational& top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    const GaussianRational q = top * inv_lead;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k - dd + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
    quot[static_cast<std::size_t>(k - dd)] = q;
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

GaussianRational Polynomial::evaluate(const GaussianRational& z) const {
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

namespace {

// Sign and magnitude text of a coefficient so terms can be joined with +/-.
std::pair<bool, std::string> split_sign(const GaussianRational& c) {
  if (c.is_real()) {
    const bool neg = sgn(c.re()) < 0;
    return {neg, to_string(neg ? Rational(-c.re()) : c.re())};
  }
  if (sgn(c.re()) == 0) {
    const bool neg = sgn(c.im()) < 0;
    return {neg, GaussianRational(Rational(0), neg ? Rational(-c.im()) : c.im()).to_string()};
  }
  return {false, "(" + c.to_string() + ")"};
}

}  // namespace

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const GaussianRational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    auto [neg, mag] = split_sign(c);
    if (neg) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    std::string var;
    if (k == 1) var = "z";
    if (k > 1) var = "z^" + std::to_string(k);
    if (var.empty()) {
      out += mag;
    } else if (mag == "1") {
      out += var;
    } else {
      out += mag + "*" + var;
    }
  }
  return out;
}

Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd undefined");
  Polynomial a = p;
  Polynomial b = q;
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    // Keeping the remainder monic bounds coefficient growth a little.
    b = r.monic();
  }
  return a.monic();
}

}  // namespace ratsemi
