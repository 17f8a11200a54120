#include "abel/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace abel {

Poly::Poly(Rational constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

Poly Poly::monomial(int degree, Rational coeff) {
  if (degree < 0) throw std::invalid_argument("Poly::monomial: negative degree");
  if (coeff.is_zero()) return Poly();
  std::vector<Rational> c(static_cast<size_t>(degree) + 1, Rational(0));
  c.back() = std::move(coeff);
  return Poly(std::move(c));
}

void Poly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::optional<int> Poly::degree() const {
  if (c_.empty()) return std::nullopt;
  return static_cast<int>(c_.size()) - 1;
}

Rational Poly::coeff(int k) const {
  if (k < 0 || static_cast<size_t>(k) >= c_.size()) return Rational(0);
  return c_[static_cast<size_t>(k)];
}

Rational Poly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational Poly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Poly::eval_double(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rational(static_cast<long>(k)) * c_[k];
  return Poly(std::move(d));
}

Poly Poly::antiderivative_from(const Rational& a) const {
  std::vector<Rational> p(c_.size() + 1, Rational(0));
  for (size_t k = 0; k < c_.size(); ++k)
    p[k + 1] = c_[k] / Rational(static_cast<long>(k) + 1);
  Poly raw(std::move(p));
  Rational shift = raw(a);
  return raw - Poly(shift);
}

Rational Poly::definite_integral(const Rational& a, const Rational& b) const {
  Poly p = antiderivative_from(a);
  return p(b);
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + Poly(*it);
  return acc;
}

Poly Poly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("Poly::pow: negative exponent");
  Poly acc(Rational(1));
  for (int i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return (Rational(1) / leading()) * *this;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(c));
}

Poly operator*(const Rational& s, const Poly& p) {
  std::vector<Rational> c(p.c_.size());
  for (size_t i = 0; i < p.c_.size(); ++i) c[i] = s * p.c_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& p) { return Rational(-1) * p; }

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("Poly::divmod: division by zero polynomial");
  if (a.c_.size() < b.c_.size()) return {Poly(), a};
  const int da = static_cast<int>(a.c_.size()) - 1;
  const int db = static_cast<int>(b.c_.size()) - 1;
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quo(static_cast<size_t>(da - db) + 1, Rational(0));
  const Rational& lead = b.c_.back();
  for (int k = da; k >= db; --k) {
    Rational q = rem[static_cast<size_t>(k)] / lead;
    if (q.is_zero()) continue;
    quo[static_cast<size_t>(k - db)] = q;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<size_t>(k - db + j)] -= q * b.c_[static_cast<size_t>(j)];
  }
  rem.resize(static_cast<size_t>(db));
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();  // keeps the coefficients small; gcd is only defined up to units
  }
  return x.monic();
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool unit = (mag == Rational(1));
    if (k == 0) {
      os << mag.compact_str();
    } else {
      if (!unit) os << mag.compact_str() << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::vector<std::pair<Poly, int>> square_free_decomposition(const Poly& p) {
  if (p.is_zero())
    throw std::domain_error("square_free_decomposition: zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  if (p.is_constant()) return out;

  // Yun's algorithm over Q.
  Poly d = Poly::gcd(p, p.derivative());
  Poly b = Poly::divmod(p, d).first;
  Poly c = Poly::divmod(p.derivative(), d).first;
  Poly z = c - b.derivative();
  int i = 1;
  while (!b.is_constant()) {
    Poly a = Poly::gcd(b, z);
    if (!a.is_constant()) out.emplace_back(a, i);
    b = Poly::divmod(b, a).first;
    c = Poly::divmod(z, a).first;
    z = c - b.derivative();
    ++i;
  }
  return out;
}

Poly odd_multiplicity_part(const Poly& p) {
  Poly out(Rational(1));
  for (const auto& [factor, mult] : square_free_decomposition(p))
    if (mult % 2 == 1) out = out * factor;
  return out;
}

}  // namespace abel
