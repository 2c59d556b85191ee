#pragma once

#include <variant>

#include "muntzlab/polynomial.hpp"
#include "muntzlab/rational.hpp"

namespace muntzlab {

/// Indicator of the tail interval [s,1].
struct IndicatorTail {
  Rational s;
};

/// Hinge ramp (x - a)^+.
struct RampTail {
  Rational a;
};

/// Exactly integrable element of L^2[0,1]: a polynomial, a tail indicator
/// chi_[s,1], or a tail ramp (x-a)^+. Every variant has closed-form moments
/// against x^k on [0,u], which is what keeps the whole pipeline exact.
class Target {
 public:
  Target(Polynomial p) : v_(std::move(p)) {}  // NOLINT: implicit by design
  Target(IndicatorTail t);                    // NOLINT
  Target(RampTail t);                         // NOLINT

  const std::variant<Polynomial, IndicatorTail, RampTail>& value() const { return v_; }
  bool is_polynomial() const { return std::holds_alternative<Polynomial>(v_); }
  const Polynomial* as_polynomial() const { return std::get_if<Polynomial>(&v_); }

 private:
  std::variant<Polynomial, IndicatorTail, RampTail> v_;
};

/// Exact moment: integral of t(x) * x^k over [0,u], 0 < u <= 1, k >= 0.
Rational moment(const Target& t, long k, const Rational& u);

/// Exact squared L^2 norm of t restricted to [0,u].
Rational norm_sq(const Target& t, const Rational& u);

}  // namespace muntzlab
