#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace hyperk {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "p/q" or "-p/q". Throws InvalidInput on anything else.
Rational parse_rational(std::string_view text);

/// Parses a decimal literal such as "0.25" or "1e-3" by going through a
/// double; the result is the exact rational value of that double.
Rational parse_decimal(std::string_view text);

std::string to_string(const Rational& value);

/// Exact rational value of a finite double (every double is a dyadic rational).
Rational rational_from_double(double value);
Rational rational_from_long_double(long double value);

inline int sign(const Rational& value) { return sgn(value); }
inline int sign(const Integer& value) { return sgn(value); }

double to_double(const Rational& value);
long double to_long_double(const Rational& value);

/// Exact square root of a nonnegative rational when it is a perfect square.
bool exact_sqrt(const Rational& value, Rational& root);

/// Sign of p + q*sqrt(r) for r >= 0, decided without leaving the rationals.
int sign_of_surd(const Rational& p, const Rational& q, const Rational& r);

/// A real number p + q*sqrt(r) with rational p, q and a positive integer
/// radicand r. Rationals are the q == 0 case (radicand stored as 0).
///
/// Perfect-square radicands are folded into p, and small square factors are
/// pulled out of r, so that most values coming from the same quadratic share
/// a radicand. Arithmetic is closed when both operands share a radicand or
/// one is rational; mixing two different irrational radicands throws
/// std::domain_error. Ordering is total and exact for any pair.
class QuadraticReal {
 public:
  QuadraticReal() = default;
  QuadraticReal(const Rational& value) : p_(value) {}  // NOLINT(implicit)
  QuadraticReal(int value) : p_(value) {}              // NOLINT(implicit)
  QuadraticReal(Rational p, Rational q, Integer radicand);

  /// sqrt(value) for a nonnegative rational.
  static QuadraticReal sqrt(const Rational& value);

  const Rational& rational_part() const { return p_; }
  const Rational& surd_coefficient() const { return q_; }
  const Integer& radicand() const { return r_; }
  bool is_rational() const { return sgn(q_) == 0; }
  /// Throws std::domain_error when the value is irrational.
  const Rational& as_rational() const;

  double to_double() const;
  long double to_long_double() const;
  int sign() const;
  QuadraticReal conjugate() const;

  QuadraticReal operator-() const;
  friend QuadraticReal operator+(const QuadraticReal& a, const QuadraticReal& b);
  friend QuadraticReal operator-(const QuadraticReal& a, const QuadraticReal& b);
  friend QuadraticReal operator*(const QuadraticReal& a, const QuadraticReal& b);
  friend QuadraticReal operator/(const QuadraticReal& a, const QuadraticReal& b);

  friend bool operator==(const QuadraticReal& a, const QuadraticReal& b);
  friend std::strong_ordering operator<=>(const QuadraticReal& a, const QuadraticReal& b);

 private:
  void normalize();

  Rational p_;
  Rational q_;
  Integer r_;
};

/// Three-way exact comparison of two quadratic reals with possibly different
/// radicands.
int compare(const QuadraticReal& a, const QuadraticReal& b);

std::string to_string(const QuadraticReal& value);

}  // namespace hyperk
