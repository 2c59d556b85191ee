#pragma once

#include <functional>
#include <random>
#include <string>
#include <string_view>

#include "muntzlab/polynomial.hpp"
#include "muntzlab/rational.hpp"

namespace muntzlab {

/// Operator acting on monomials as T x^k = c_k x^(k+m); m is the order.
/// The coefficient rule must be a deterministic total function of k.
struct MonomialOperator {
  std::string name;
  long order = 0;
  std::function<Rational(long)> coeff;
};

/// hardy: m=0, c_k = 1/(k+1). volterra = M_x hardy: m=1, c_k = 1/(k+1).
/// mult_x: m=1, c_k = 1. Unknown names throw std::invalid_argument.
MonomialOperator builtin_operator(std::string_view name);

/// Linear extension of the monomial action; zero coefficients are pruned.
Polynomial apply(const MonomialOperator& op, const Polynomial& p);

struct HardyIdentityTerms {
  Rational lhs;               // ||p||^2
  Rational contraction_term;  // ||(1-H)p||^2
  Rational integral_sq;       // (integral of p over [0,1])^2
};

/// The three exact quantities of the sum-of-squares identity
/// ||p||^2 = ||(1-H)p||^2 + (int p)^2; the caller asserts the equality.
HardyIdentityTerms hardy_identity_terms(const Polynomial& p);

/// Random corpus draw: every coefficient 0..max_degree gets numerator
/// uniform in [-9,9] and denominator uniform in [1,9].
Polynomial random_polynomial(std::mt19937_64& engine, long max_degree);

/// Deterministic engine for trial `index` of a seeded run.
std::mt19937_64 trial_engine(long seed, long index);

/// Max over trials of sqrt(||Tp||^2 / ||p||^2); the quotient is computed
/// exactly and floated at the end. Trial 0 always uses the constant witness
/// p = 1, the remaining trials are seeded random draws (zero draws redrawn).
/// This is a lower bound witness, not an estimate of the norm itself.
double operator_norm_lower_bound(const MonomialOperator& op, long max_degree,
                                 long trials, long seed);

struct SupGridResult {
  double sup_transformed;
  double sup_input;
};

/// Sup of |Hp| and |p| over the uniform grid {i/(grid_points-1)}.
SupGridResult sup_contraction_check(const Polynomial& p, long grid_points);

}  // namespace muntzlab
