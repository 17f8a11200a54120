#include "abel/trigpoly.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "abel/errors.hpp"

namespace abel {

namespace {

// Accumulator for product expansion: harmonic-indexed cos/sin buckets with
// the usual reflection rules cos(-k) = cos(k), sin(-k) = -sin(k), sin(0) = 0.
struct Buckets {
  Rational constant;
  std::vector<Rational> cosv, sinv;

  void ensure(size_t k) {
    if (cosv.size() < k) cosv.resize(k, Rational(0));
    if (sinv.size() < k) sinv.resize(k, Rational(0));
  }
  void add_cos(int k, const Rational& v) {
    if (v.is_zero()) return;
    if (k < 0) k = -k;
    if (k == 0) { constant += v; return; }
    ensure(static_cast<size_t>(k));
    cosv[static_cast<size_t>(k) - 1] += v;
  }
  void add_sin(int k, const Rational& v) {
    if (v.is_zero() || k == 0) return;
    if (k < 0) { add_sin(-k, -v); return; }
    ensure(static_cast<size_t>(k));
    sinv[static_cast<size_t>(k) - 1] += v;
  }
};

}  // namespace

TrigPoly::TrigPoly(Rational constant, std::vector<Rational> cos_coeffs,
                   std::vector<Rational> sin_coeffs)
    : const_(std::move(constant)), cos_(std::move(cos_coeffs)), sin_(std::move(sin_coeffs)) {
  normalize();
}

TrigPoly TrigPoly::constant(Rational c) { return TrigPoly(std::move(c), {}, {}); }

TrigPoly TrigPoly::cos_harmonic(int k, Rational c) {
  if (k < 1) throw std::invalid_argument("TrigPoly::cos_harmonic: k must be >= 1");
  std::vector<Rational> cc(static_cast<size_t>(k), Rational(0));
  cc.back() = std::move(c);
  return TrigPoly(Rational(0), std::move(cc), {});
}

TrigPoly TrigPoly::sin_harmonic(int k, Rational c) {
  if (k < 1) throw std::invalid_argument("TrigPoly::sin_harmonic: k must be >= 1");
  std::vector<Rational> sc(static_cast<size_t>(k), Rational(0));
  sc.back() = std::move(c);
  return TrigPoly(Rational(0), {}, std::move(sc));
}

void TrigPoly::normalize() {
  size_t n = std::max(cos_.size(), sin_.size());
  cos_.resize(n, Rational(0));
  sin_.resize(n, Rational(0));
  while (n > 0 && cos_[n - 1].is_zero() && sin_[n - 1].is_zero()) --n;
  cos_.resize(n);
  sin_.resize(n);
}

int TrigPoly::degree() const { return static_cast<int>(cos_.size()); }

Rational TrigPoly::cos_coeff(int k) const {
  if (k < 1 || static_cast<size_t>(k) > cos_.size()) return Rational(0);
  return cos_[static_cast<size_t>(k) - 1];
}

Rational TrigPoly::sin_coeff(int k) const {
  if (k < 1 || static_cast<size_t>(k) > sin_.size()) return Rational(0);
  return sin_[static_cast<size_t>(k) - 1];
}

TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) {
  size_t n = std::max(a.cos_.size(), b.cos_.size());
  std::vector<Rational> c(n, Rational(0)), s(n, Rational(0));
  for (size_t i = 0; i < a.cos_.size(); ++i) { c[i] += a.cos_[i]; s[i] += a.sin_[i]; }
  for (size_t i = 0; i < b.cos_.size(); ++i) { c[i] += b.cos_[i]; s[i] += b.sin_[i]; }
  return TrigPoly(a.const_ + b.const_, std::move(c), std::move(s));
}

TrigPoly operator-(const TrigPoly& a, const TrigPoly& b) { return a + (Rational(-1) * b); }

TrigPoly operator-(const TrigPoly& p) { return Rational(-1) * p; }

TrigPoly operator*(const Rational& s, const TrigPoly& p) {
  std::vector<Rational> c(p.cos_.size()), sn(p.sin_.size());
  for (size_t i = 0; i < p.cos_.size(); ++i) { c[i] = s * p.cos_[i]; sn[i] = s * p.sin_[i]; }
  return TrigPoly(s * p.const_, std::move(c), std::move(sn));
}

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
  const Rational half(1, 2);
  Buckets out;
  int da = a.degree(), db = b.degree();
  // Treat the constant as the k = 0 cosine term; the identities then cover
  // every pair uniformly.
  for (int k = 0; k <= da; ++k) {
    Rational ak = (k == 0) ? a.const_ : a.cos_coeff(k);
    Rational bk = (k == 0) ? Rational(0) : a.sin_coeff(k);
    if (ak.is_zero() && bk.is_zero()) continue;
    for (int l = 0; l <= db; ++l) {
      Rational al = (l == 0) ? b.const_ : b.cos_coeff(l);
      Rational bl = (l == 0) ? Rational(0) : b.sin_coeff(l);
      if (!ak.is_zero() && !al.is_zero()) {  // cos*cos
        Rational v = half * ak * al;
        out.add_cos(k - l, v);
        out.add_cos(k + l, v);
      }
      if (!bk.is_zero() && !bl.is_zero()) {  // sin*sin
        Rational v = half * bk * bl;
        out.add_cos(k - l, v);
        out.add_cos(k + l, -v);
      }
      if (!bk.is_zero() && !al.is_zero()) {  // sin*cos
        Rational v = half * bk * al;
        out.add_sin(k + l, v);
        out.add_sin(k - l, v);
      }
      if (!ak.is_zero() && !bl.is_zero()) {  // cos*sin
        Rational v = half * ak * bl;
        out.add_sin(k + l, v);
        out.add_sin(l - k, v);
      }
    }
  }
  return TrigPoly(std::move(out.constant), std::move(out.cosv), std::move(out.sinv));
}

TrigPoly TrigPoly::derivative() const {
  std::vector<Rational> c(cos_.size()), s(cos_.size());
  for (size_t i = 0; i < cos_.size(); ++i) {
    Rational k(static_cast<long>(i) + 1);
    c[i] = k * sin_[i];
    s[i] = -(k * cos_[i]);
  }
  return TrigPoly(Rational(0), std::move(c), std::move(s));
}

TrigPoly TrigPoly::antiderivative_from_zero() const {
  if (!const_.is_zero())
    throw NonZeroMeanError("antiderivative of a trigonometric polynomial with nonzero mean "
                           "is not a trigonometric polynomial");
  std::vector<Rational> c(cos_.size()), s(cos_.size());
  Rational c0(0);
  for (size_t i = 0; i < cos_.size(); ++i) {
    Rational k(static_cast<long>(i) + 1);
    s[i] = cos_[i] / k;       // cos k -> sin k / k
    c[i] = -(sin_[i] / k);    // sin k -> -cos k / k
    c0 -= c[i];               // fix P(0) = 0
  }
  return TrigPoly(std::move(c0), std::move(c), std::move(s));
}

Rational TrigPoly::integral_over_period() const { return Rational(2) * const_; }

double TrigPoly::eval(double theta) const {
  double acc = const_.to_double();
  for (size_t i = 0; i < cos_.size(); ++i) {
    double k = static_cast<double>(i + 1);
    acc += cos_[i].to_double() * std::cos(k * theta);
    acc += sin_[i].to_double() * std::sin(k * theta);
  }
  return acc;
}

TrigPoly TrigPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("TrigPoly::pow: negative exponent");
  TrigPoly acc = TrigPoly::constant(Rational(1));
  for (int i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

std::string TrigPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& c, const std::string& fn, int k) {
    if (c.is_zero()) return;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (fn.empty()) {
      os << mag.compact_str();
      return;
    }
    if (mag != Rational(1)) os << mag.compact_str() << "*";
    os << fn << "(";
    if (k > 1) os << k;
    os << "t)";
  };
  emit(const_, "", 0);
  for (size_t i = 0; i < cos_.size(); ++i) {
    emit(cos_[i], "cos", static_cast<int>(i) + 1);
    emit(sin_[i], "sin", static_cast<int>(i) + 1);
  }
  return os.str();
}

}  // namespace abel
