#include "abel/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace abel {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
  if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

Rational Rational::parse(std::string_view s) {
  mpq_class q;
  if (q.set_str(std::string(s), 10) != 0)
    throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
  if (sgn(q.get_den()) == 0)
    throw std::invalid_argument("Rational: zero denominator in '" + std::string(s) + "'");
  q.canonicalize();
  return Rational(q);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::compact_str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return str();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.compact_str();
}

}  // namespace abel
