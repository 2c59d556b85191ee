#include "muntzlab/rational.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace muntzlab {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(mpz_class num, mpz_class den) {
  if (sgn(den) == 0) {
    throw std::invalid_argument("Rational: zero denominator");
  }
  q_ = mpq_class(std::move(num), std::move(den));
  q_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(mpz_class(std::string(s)), mpz_class(1));
    }
    mpz_class num{std::string(s.substr(0, slash))};
    mpz_class den{std::string(s.substr(slash + 1))};
    return Rational(std::move(num), std::move(den));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: malformed literal '" + std::string(s) + "'");
  }
}

std::string Rational::str() const {
  return num().get_str() + "/" + den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw std::domain_error("Rational: division by zero");
  }
  q_ /= o.q_;
  return *this;
}

namespace {

// Exact |q - d| comparison picks the closer of two adjacent binary64
// candidates; the even-mantissa one wins ties.
double closer_candidate(const mpq_class& q, double a, double b) {
  const mpq_class da = abs(q - mpq_class(a));
  const mpq_class db = abs(q - mpq_class(b));
  if (da < db) return a;
  if (db < da) return b;
  return (std::bit_cast<std::uint64_t>(a) & 1u) == 0 ? a : b;
}

}  // namespace

double Rational::to_double(bool* overflow) const {
  if (overflow != nullptr) *overflow = false;
  if (is_zero()) return 0.0;

  // Round-to-nearest overflow threshold: 2^1024 - 2^970.
  static const mpq_class kOverflow = [] {
    mpz_class hi, lo;
    mpz_ui_pow_ui(hi.get_mpz_t(), 2, 1024);
    mpz_ui_pow_ui(lo.get_mpz_t(), 2, 970);
    return mpq_class(hi - lo);
  }();
  if (abs(q_) >= kOverflow) {
    if (overflow != nullptr) *overflow = true;
    return sign() > 0 ? std::numeric_limits<double>::infinity()
                      : -std::numeric_limits<double>::infinity();
  }

  // mpq_get_d truncates toward zero with error below one ulp, so the nearest
  // double is either the estimate or one of its neighbors.
  double d = mpq_get_d(q_.get_mpq_t());
  const double lo = std::nextafter(d, -std::numeric_limits<double>::infinity());
  const double hi = std::nextafter(d, std::numeric_limits<double>::infinity());
  if (std::isfinite(lo)) d = closer_candidate(q_, d, lo);
  if (std::isfinite(hi)) d = closer_candidate(q_, d, hi);
  return d;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  const bool invert = exp < 0;
  if (invert && base.is_zero()) {
    throw std::domain_error("pow: zero base with negative exponent");
  }
  const auto e = static_cast<unsigned long>(invert ? -exp : exp);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), e);
  return invert ? Rational(std::move(den), std::move(num))
                : Rational(std::move(num), std::move(den));
}

}  // namespace muntzlab
