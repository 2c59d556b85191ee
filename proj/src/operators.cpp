#include "muntzlab/operators.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace muntzlab {

MonomialOperator builtin_operator(std::string_view name) {
  if (name == "hardy") {
    return {"hardy", 0, [](long k) { return Rational(1, k + 1); }};
  }
  if (name == "volterra") {
    return {"volterra", 1, [](long k) { return Rational(1, k + 1); }};
  }
  if (name == "mult_x") {
    return {"mult_x", 1, [](long) { return Rational(1); }};
  }
  throw std::invalid_argument("builtin_operator: unknown operator '" + std::string(name) + "'");
}

Polynomial apply(const MonomialOperator& op, const Polynomial& p) {
  Polynomial out;
  for (const auto& [k, a] : p.coeffs()) {
    out.set_coeff(k + op.order, a * op.coeff(k));
  }
  return out;
}

HardyIdentityTerms hardy_identity_terms(const Polynomial& p) {
  // (1-H) x^k = (k/(k+1)) x^k on each term.
  Polynomial contracted;
  for (const auto& [k, a] : p.coeffs()) {
    contracted.set_coeff(k, a * Rational(k, k + 1));
  }
  const Rational mean = integral(p, Rational(1));
  return {inner_product(p, p), inner_product(contracted, contracted), mean * mean};
}

Polynomial random_polynomial(std::mt19937_64& engine, long max_degree) {
  Polynomial p;
  for (long k = 0; k <= max_degree; ++k) {
    const long num = static_cast<long>(engine() % 19) - 9;
    const long den = 1 + static_cast<long>(engine() % 9);
    p.set_coeff(k, Rational(num, den));
  }
  return p;
}

std::mt19937_64 trial_engine(long seed, long index) {
  const auto s = static_cast<std::uint64_t>(seed);
  const auto t = static_cast<std::uint64_t>(index);
  std::seed_seq seq{static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32),
                    static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(t >> 32)};
  return std::mt19937_64(seq);
}

double operator_norm_lower_bound(const MonomialOperator& op, long max_degree,
                                 long trials, long seed) {
  if (trials < 1) throw std::invalid_argument("operator_norm_lower_bound: trials must be >= 1");
  if (max_degree < 0) throw std::invalid_argument("operator_norm_lower_bound: negative degree");

  double best = 0.0;
  for (long t = 0; t < trials; ++t) {
    // Trial 0 is the canonical constant witness; the rest are random draws.
    Polynomial p{Rational(1)};
    if (t > 0) {
      auto engine = trial_engine(seed, t);
      p = random_polynomial(engine, max_degree);
      while (p.is_zero()) p = random_polynomial(engine, max_degree);
    }
    const Polynomial tp = apply(op, p);
    const Rational quotient = inner_product(tp, tp) / inner_product(p, p);
    best = std::max(best, std::sqrt(quotient.to_double()));
  }
  return best;
}

SupGridResult sup_contraction_check(const Polynomial& p, long grid_points) {
  if (grid_points < 2) {
    throw std::invalid_argument("sup_contraction_check: need at least two grid points");
  }
  const Polynomial hp = apply(builtin_operator("hardy"), p);
  SupGridResult r{0.0, 0.0};
  const double step = 1.0 / static_cast<double>(grid_points - 1);
  for (long i = 0; i < grid_points; ++i) {
    const double x = i == grid_points - 1 ? 1.0 : static_cast<double>(i) * step;
    r.sup_transformed = std::max(r.sup_transformed, std::fabs(eval_float(hp, x)));
    r.sup_input = std::max(r.sup_input, std::fabs(eval_float(p, x)));
  }
  return r;
}

}  // namespace muntzlab
