#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "horadam/errors.hpp"

namespace horadam {

using Integer = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(static_cast<long>(value)) {}  // NOLINT(implicit)
  Rational(const Integer& value) : value_(value) {}                    // NOLINT(implicit)
  /// Throws DivisionError when `den` is zero.
  Rational(const Integer& num, const Integer& den);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  /// Throws NotRationalError unless the denominator is 1.
  Integer to_integer() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "num/den", or just "num" for integers.
  std::string to_string() const;

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Radicand D = p^2 + 4q of the characteristic roots. Never zero.
class Discriminant {
 public:
  /// Throws DegenerateRootError when `value` is zero.
  explicit Discriminant(Integer value);

  static Discriminant of(std::int64_t p, std::int64_t q);

  const Integer& value() const { return value_; }
  bool is_perfect_square() const;

  friend bool operator==(const Discriminant&, const Discriminant&) = default;

 private:
  Integer value_;
};

/// rat + irr * sqrt(D) in Q(sqrt D). D is carried by every value and must
/// match on every binary operation.
class QuadExt {
 public:
  QuadExt(Rational rat, Rational irr, Discriminant disc)
      : rat_(std::move(rat)), irr_(std::move(irr)), disc_(std::move(disc)) {}

  static QuadExt zero(const Discriminant& disc) { return {0, 0, disc}; }
  static QuadExt one(const Discriminant& disc) { return {1, 0, disc}; }
  static QuadExt rational(Rational r, const Discriminant& disc) { return {std::move(r), 0, disc}; }
  static QuadExt sqrt_d(const Discriminant& disc) { return {0, 1, disc}; }

  const Rational& rat() const { return rat_; }
  const Rational& irr() const { return irr_; }
  const Discriminant& disc() const { return disc_; }

  bool is_zero() const { return rat_.is_zero() && irr_.is_zero(); }
  bool is_rational() const { return irr_.is_zero(); }

  QuadExt zero_like() const { return zero(disc_); }
  QuadExt one_like() const { return one(disc_); }

  /// rat - irr * sqrt(D).
  QuadExt field_conjugate() const { return {rat_, -irr_, disc_}; }
  /// x * field_conjugate(x) = rat^2 - irr^2 D.
  Rational field_norm() const;

  /// Throws DivisionError for zero and for zero divisors (square D only).
  QuadExt inverse() const;
  QuadExt pow(std::uint64_t exponent) const;

  QuadExt operator-() const { return {-rat_, -irr_, disc_}; }
  QuadExt& operator+=(const QuadExt& rhs);
  QuadExt& operator-=(const QuadExt& rhs);
  QuadExt& operator*=(const QuadExt& rhs);
  QuadExt& operator/=(const QuadExt& rhs);
  QuadExt& operator*=(const Rational& rhs);

  friend QuadExt operator+(QuadExt lhs, const QuadExt& rhs) { return lhs += rhs; }
  friend QuadExt operator-(QuadExt lhs, const QuadExt& rhs) { return lhs -= rhs; }
  friend QuadExt operator*(QuadExt lhs, const QuadExt& rhs) { return lhs *= rhs; }
  friend QuadExt operator/(QuadExt lhs, const QuadExt& rhs) { return lhs /= rhs; }
  friend QuadExt operator*(QuadExt lhs, const Rational& rhs) { return lhs *= rhs; }
  friend QuadExt operator*(const Rational& lhs, QuadExt rhs) { return rhs *= lhs; }

  friend bool operator==(const QuadExt&, const QuadExt&) = default;

  /// "rat", "irr*sqrt(D)" or "rat+irr*sqrt(D)", rationals rendered exactly.
  std::string to_string() const;

 private:
  void require_same_disc(const QuadExt& other) const;

  Rational rat_;
  Rational irr_;
  Discriminant disc_;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

QuadExt quad_add(const QuadExt& x, const QuadExt& y);
QuadExt quad_mul(const QuadExt& x, const QuadExt& y);
QuadExt quad_inv(const QuadExt& x);

struct Roots {
  QuadExt alpha;
  QuadExt beta;
};

/// alpha = p/2 + sqrt(D)/2, beta = p/2 - sqrt(D)/2 with D = p^2 + 4q.
/// Throws DegenerateRootError when D = 0.
Roots make_roots(std::int64_t p, std::int64_t q);

/// Throws NotRationalError when the sqrt(D) component is nonzero.
Rational reduce_to_rational(const QuadExt& x);

}  // namespace horadam
