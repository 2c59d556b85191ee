#include "muntzlab/target.hpp"

#include <stdexcept>

namespace muntzlab {

namespace {

void check_tail_param(const Rational& v, const char* what) {
  if (v < Rational(0) || v >= Rational(1)) {
    throw std::invalid_argument(std::string(what) + ": parameter must lie in [0,1)");
  }
}

void check_upper(const Rational& u) {
  if (u <= Rational(0) || u > Rational(1)) {
    throw std::domain_error("target: integration bound must lie in (0,1]");
  }
}

}  // namespace

Target::Target(IndicatorTail t) : v_(std::move(t)) {
  check_tail_param(std::get<IndicatorTail>(v_).s, "IndicatorTail");
}

Target::Target(RampTail t) : v_(std::move(t)) {
  check_tail_param(std::get<RampTail>(v_).a, "RampTail");
}

Rational moment(const Target& t, long k, const Rational& u) {
  check_upper(u);
  if (k < 0) {
    throw std::invalid_argument("moment: negative power");
  }
  return std::visit(
      [&](const auto& v) -> Rational {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Polynomial>) {
          return integral(v * Polynomial::monomial(k, Rational(1)), u);
        } else if constexpr (std::is_same_v<V, IndicatorTail>) {
          if (u <= v.s) return Rational(0);
          return (pow(u, k + 1) - pow(v.s, k + 1)) / Rational(k + 1);
        } else {
          // Ramp: integral over [a,u] of (x - a) x^k.
          if (u <= v.a) return Rational(0);
          const Rational head = (pow(u, k + 2) - pow(v.a, k + 2)) / Rational(k + 2);
          const Rational tail = v.a * (pow(u, k + 1) - pow(v.a, k + 1)) / Rational(k + 1);
          return head - tail;
        }
      },
      t.value());
}

Rational norm_sq(const Target& t, const Rational& u) {
  check_upper(u);
  return std::visit(
      [&](const auto& v) -> Rational {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Polynomial>) {
          return integral(v * v, u);
        } else if constexpr (std::is_same_v<V, IndicatorTail>) {
          return u <= v.s ? Rational(0) : u - v.s;
        } else {
          if (u <= v.a) return Rational(0);
          const Rational w = u - v.a;
          return w * w * w / Rational(3);
        }
      },
      t.value());
}

}  // namespace muntzlab
