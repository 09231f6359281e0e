#include "horadam/exact_scalars.hpp"

#include <ostream>

namespace horadam {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Integer Rational::to_integer() const {
  if (!is_integer()) throw NotRationalError("expected an integer, got " + to_string());
  return value_.get_num();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionError("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Discriminant::Discriminant(Integer value) : value_(std::move(value)) {
  if (value_ == 0) throw DegenerateRootError("discriminant p^2 + 4q is zero");
}

Discriminant Discriminant::of(std::int64_t p, std::int64_t q) {
  const Integer pp(static_cast<long>(p));
  const Integer qq(static_cast<long>(q));
  return Discriminant(Integer(pp * pp + 4 * qq));
}

bool Discriminant::is_perfect_square() const {
  return sgn(value_) > 0 && mpz_perfect_square_p(value_.get_mpz_t()) != 0;
}

void QuadExt::require_same_disc(const QuadExt& other) const {
  if (disc_ != other.disc_) {
    throw UsageError("mixed discriminants " + disc_.value().get_str() + " and " +
                     other.disc_.value().get_str());
  }
}

Rational QuadExt::field_norm() const {
  return rat_ * rat_ - irr_ * irr_ * Rational(disc_.value());
}

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw DivisionError("inverse of zero in Q(sqrt D)");
  const Rational n = field_norm();
  if (n.is_zero()) {
    throw DivisionError("inverse of zero divisor " + to_string() + " in Q(sqrt " +
                        disc_.value().get_str() + ")");
  }
  return {rat_ / n, -irr_ / n, disc_};
}

QuadExt QuadExt::pow(std::uint64_t exponent) const {
  QuadExt result = one_like();
  QuadExt base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

QuadExt& QuadExt::operator+=(const QuadExt& rhs) {
  require_same_disc(rhs);
  rat_ += rhs.rat_;
  irr_ += rhs.irr_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& rhs) {
  require_same_disc(rhs);
  rat_ -= rhs.rat_;
  irr_ -= rhs.irr_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& rhs) {
  require_same_disc(rhs);
  Rational rat = rat_ * rhs.rat_ + irr_ * rhs.irr_ * Rational(disc_.value());
  Rational irr = rat_ * rhs.irr_ + rhs.rat_ * irr_;
  rat_ = std::move(rat);
  irr_ = std::move(irr);
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& rhs) {
  require_same_disc(rhs);
  return *this *= rhs.inverse();
}

QuadExt& QuadExt::operator*=(const Rational& rhs) {
  rat_ *= rhs;
  irr_ *= rhs;
  return *this;
}

std::string QuadExt::to_string() const {
  if (irr_.is_zero()) return rat_.to_string();
  std::string out;
  if (!rat_.is_zero()) out = rat_.to_string() + (irr_.sign() > 0 ? "+" : "");
  return out + irr_.to_string() + "*sqrt(" + disc_.value().get_str() + ")";
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.to_string(); }

QuadExt quad_add(const QuadExt& x, const QuadExt& y) { return x + y; }
QuadExt quad_mul(const QuadExt& x, const QuadExt& y) { return x * y; }
QuadExt quad_inv(const QuadExt& x) { return x.inverse(); }

Roots make_roots(std::int64_t p, std::int64_t q) {
  const Discriminant disc = Discriminant::of(p, q);
  const Rational half_p = Rational(p) / Rational(2);
  const Rational half(Integer(1), Integer(2));
  return {QuadExt(half_p, half, disc), QuadExt(half_p, -half, disc)};
}

Rational reduce_to_rational(const QuadExt& x) {
  if (!x.is_rational()) throw NotRationalError("nonzero sqrt(D) component in " + x.to_string());
  return x.rat();
}

}  // namespace horadam
