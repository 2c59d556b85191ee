#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace muntzlab {

/// Exact arbitrary-precision rational. Canonical form is an invariant:
/// the denominator is positive and coprime to the numerator after every
/// constructor and arithmetic operation. Equality is structural.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
  Rational(long num, long den);
  Rational(mpz_class num, mpz_class den);

  /// Parses "num" or "num/den" in base 10. Throws std::invalid_argument on
  /// malformed input or a zero denominator.
  static Rational from_string(std::string_view s);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  /// Canonical serialization, always with an explicit denominator: "-1/2", "0/1".
  std::string str() const;

  /// Nearest binary64 value, ties to even. Values beyond the binary64 range
  /// saturate to +/-infinity and set *overflow when the pointer is non-null.
  double to_double(bool* overflow = nullptr) const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  friend Rational abs(const Rational& a) { return Rational(mpq_class(::abs(a.q_))); }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

/// base^exp with exact arithmetic; negative exponents invert, 0^negative throws.
Rational pow(const Rational& base, long exp);

}  // namespace muntzlab

namespace Eigen {

template <>
struct NumTraits<muntzlab::Rational> : GenericNumTraits<muntzlab::Rational> {
  using Real = muntzlab::Rational;
  using NonInteger = muntzlab::Rational;
  using Nested = muntzlab::Rational;
  using Literal = long;

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 200,
    MulCost = 200,
  };
};

}  // namespace Eigen
