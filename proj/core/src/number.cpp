#include "hyperk/number.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "hyperk/errors.hpp"

namespace hyperk {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

// Top 64 significant bits of |z| and the binary exponent, so that
// |z| ~= mantissa * 2^exponent.
long double integer_to_long_double(const Integer& z, long& exponent) {
  exponent = 0;
  if (sgn(z) == 0) return 0.0L;
  Integer magnitude = abs(z);
  const std::size_t bits = mpz_sizeinbase(magnitude.get_mpz_t(), 2);
  if (bits > 64) {
    exponent = static_cast<long>(bits - 64);
    mpz_fdiv_q_2exp(magnitude.get_mpz_t(), magnitude.get_mpz_t(), bits - 64);
  }
  long double m = static_cast<long double>(mpz_get_ui(magnitude.get_mpz_t()));
  return sgn(z) < 0 ? -m : m;
}

// Sign of A + B*sqrt(r1) + C*sqrt(r2).
int sign_of_two_surds(const Rational& A, const Rational& B, const Rational& r1,
                      const Rational& C, const Rational& r2) {
  // X = A + B sqrt(r1), Y = -C sqrt(r2); result is sign(X - Y).
  const int sx = sign_of_surd(A, B, r1);
  const int sy = (sgn(r2) == 0) ? 0 : -sgn(C);
  if (sx != sy) return sx > sy ? 1 : -1;
  if (sx == 0) return 0;
  // Same strict sign: compare magnitudes through squares.
  const int magnitude = sign_of_surd(A * A + B * B * r1 - C * C * r2, 2 * A * B, r1);
  return sx * magnitude;
}

constexpr std::array<unsigned long, 25> kSmallPrimes = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41,
    43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw InvalidInput("not a rational number: '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (sgn(d) == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  Rational value(n, d);
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

Rational parse_decimal(std::string_view text) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
    throw InvalidInput("not a decimal number: '" + std::string(text) + "'");
  }
  return rational_from_double(value);
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) throw InvalidInput("non-finite value has no rational form");
  return Rational(value);
}

Rational rational_from_long_double(long double value) {
  if (!std::isfinite(value)) throw InvalidInput("non-finite value has no rational form");
  if (value == 0.0L) return Rational(0);
  int exponent = 0;
  long double mantissa = std::frexp(std::fabs(value), &exponent);
  auto scaled = static_cast<unsigned long>(std::ldexp(mantissa, 64));
  Integer numerator(scaled);
  Rational result(numerator);
  const long shift = static_cast<long>(exponent) - 64;
  if (shift >= 0) {
    mpq_mul_2exp(result.get_mpq_t(), result.get_mpq_t(), static_cast<mp_bitcnt_t>(shift));
  } else {
    mpq_div_2exp(result.get_mpq_t(), result.get_mpq_t(), static_cast<mp_bitcnt_t>(-shift));
  }
  return value < 0 ? Rational(-result) : result;
}

double to_double(const Rational& value) {
  return static_cast<double>(to_long_double(value));
}

long double to_long_double(const Rational& value) {
  long en = 0;
  long ed = 0;
  const long double n = integer_to_long_double(value.get_num(), en);
  const long double d = integer_to_long_double(value.get_den(), ed);
  return std::ldexp(n / d, static_cast<int>(en - ed));
}

bool exact_sqrt(const Rational& value, Rational& root) {
  if (sgn(value) < 0) return false;
  if (sgn(value) == 0) {
    root = 0;
    return true;
  }
  if (mpz_perfect_square_p(value.get_num_mpz_t()) == 0 ||
      mpz_perfect_square_p(value.get_den_mpz_t()) == 0) {
    return false;
  }
  Integer n = sqrt(value.get_num());
  Integer d = sqrt(value.get_den());
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

int sign_of_surd(const Rational& p, const Rational& q, const Rational& r) {
  const int sp = sgn(p);
  const int sq = (sgn(r) == 0) ? 0 : sgn(q);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  const Rational diff = p * p - q * q * r;
  const int s = sgn(diff);
  if (s > 0) return sp;
  if (s < 0) return sq;
  return 0;
}

QuadraticReal::QuadraticReal(Rational p, Rational q, Integer radicand)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(radicand)) {
  if (sgn(r_) < 0) throw std::domain_error("negative radicand");
  normalize();
}

QuadraticReal QuadraticReal::sqrt(const Rational& value) {
  if (sgn(value) < 0) throw std::domain_error("square root of a negative rational");
  // sqrt(n/d) = sqrt(n*d)/d
  const Integer& n = value.get_num();
  const Integer& d = value.get_den();
  Rational coeff(1);
  coeff /= Rational(d);
  return QuadraticReal(Rational(0), coeff, Integer(n * d));
}

void QuadraticReal::normalize() {
  if (sgn(q_) == 0 || sgn(r_) == 0) {
    q_ = 0;
    r_ = 0;
    return;
  }
  if (mpz_perfect_square_p(r_.get_mpz_t()) != 0) {
    p_ += q_ * Rational(::sqrt(r_));
    q_ = 0;
    r_ = 0;
    return;
  }
  for (unsigned long prime : kSmallPrimes) {
    const unsigned long square = prime * prime;
    if (r_ < square) break;
    while (mpz_divisible_ui_p(r_.get_mpz_t(), square) != 0) {
      mpz_divexact_ui(r_.get_mpz_t(), r_.get_mpz_t(), square);
      q_ *= prime;
    }
  }
}

const Rational& QuadraticReal::as_rational() const {
  if (!is_rational()) throw std::domain_error("value is irrational: " + to_string(*this));
  return p_;
}

double QuadraticReal::to_double() const { return static_cast<double>(to_long_double()); }

long double QuadraticReal::to_long_double() const {
  if (is_rational()) return hyperk::to_long_double(p_);
  const long double p = hyperk::to_long_double(p_);
  const long double s = hyperk::to_long_double(q_) * std::sqrt(hyperk::to_long_double(Rational(r_)));
  if ((p < 0) == (s < 0)) return p + s;
  // Opposite signs: use the conjugate to avoid cancellation.
  const Rational norm = p_ * p_ - q_ * q_ * Rational(r_);
  return hyperk::to_long_double(norm) / (p - s);
}

int QuadraticReal::sign() const { return sign_of_surd(p_, q_, Rational(r_)); }

QuadraticReal QuadraticReal::conjugate() const {
  QuadraticReal out = *this;
  out.q_ = -out.q_;
  return out;
}

QuadraticReal QuadraticReal::operator-() const {
  QuadraticReal out = *this;
  out.p_ = -out.p_;
  out.q_ = -out.q_;
  return out;
}

namespace {

// Rewrites b over a's radicand when the two radicands differ by a square.
void align(const QuadraticReal& a, const QuadraticReal& b, Rational& bq, Integer& radicand) {
  if (a.is_rational()) {
    bq = b.surd_coefficient();
    radicand = b.radicand();
    return;
  }
  radicand = a.radicand();
  if (b.is_rational()) {
    bq = 0;
    return;
  }
  if (a.radicand() == b.radicand()) {
    bq = b.surd_coefficient();
    return;
  }
  const Integer product = a.radicand() * b.radicand();
  if (mpz_perfect_square_p(product.get_mpz_t()) == 0) {
    throw std::domain_error("arithmetic across incompatible radicands " + a.radicand().get_str() +
                            " and " + b.radicand().get_str());
  }
  // sqrt(rb) = sqrt(ra*rb)/ra * sqrt(ra)
  bq = b.surd_coefficient() * Rational(::sqrt(product)) / Rational(a.radicand());
}

}  // namespace

QuadraticReal operator+(const QuadraticReal& a, const QuadraticReal& b) {
  Rational bq;
  Integer r;
  align(a, b, bq, r);
  return QuadraticReal(a.p_ + b.p_, a.q_ + bq, r);
}

QuadraticReal operator-(const QuadraticReal& a, const QuadraticReal& b) { return a + (-b); }

QuadraticReal operator*(const QuadraticReal& a, const QuadraticReal& b) {
  Rational bq;
  Integer r;
  align(a, b, bq, r);
  const Rational rr(r);
  return QuadraticReal(a.p_ * b.p_ + a.q_ * bq * rr, a.p_ * bq + a.q_ * b.p_, r);
}

QuadraticReal operator/(const QuadraticReal& a, const QuadraticReal& b) {
  if (b.sign() == 0) throw std::domain_error("division by zero");
  if (b.is_rational()) {
    return QuadraticReal(a.p_ / b.p_, a.q_ / b.p_, a.r_);
  }
  const Rational norm = b.p_ * b.p_ - b.q_ * b.q_ * Rational(b.r_);
  QuadraticReal numerator = a * b.conjugate();
  return QuadraticReal(numerator.p_ / norm, numerator.q_ / norm, numerator.r_);
}

int compare(const QuadraticReal& a, const QuadraticReal& b) {
  const Rational A = a.rational_part() - b.rational_part();
  if (a.is_rational() || b.is_rational() || a.radicand() == b.radicand()) {
    const Rational r = a.is_rational() ? Rational(b.radicand()) : Rational(a.radicand());
    const Rational q = a.surd_coefficient() - b.surd_coefficient();
    if (a.is_rational() && b.is_rational()) return sgn(A);
    return sign_of_surd(A, q, r);
  }
  return sign_of_two_surds(A, a.surd_coefficient(), Rational(a.radicand()),
                           -b.surd_coefficient(), Rational(b.radicand()));
}

bool operator==(const QuadraticReal& a, const QuadraticReal& b) { return compare(a, b) == 0; }

std::strong_ordering operator<=>(const QuadraticReal& a, const QuadraticReal& b) {
  const int c = compare(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_string(const QuadraticReal& value) {
  if (value.is_rational()) return to_string(value.rational_part());
  std::string out;
  if (sgn(value.rational_part()) != 0) out = to_string(value.rational_part());
  const Rational& q = value.surd_coefficient();
  const Rational magnitude = abs(q);
  if (sgn(q) < 0) {
    out += "-";
  } else if (!out.empty()) {
    out += "+";
  }
  if (magnitude != 1) out += to_string(magnitude) + "*";
  out += "sqrt(" + value.radicand().get_str() + ")";
  return out;
}

}  // namespace hyperk
