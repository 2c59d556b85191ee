#pragma once

#include <cstdint>
#include <vector>

#include "muntzlab/linalg.hpp"
#include "muntzlab/rational.hpp"
#include "muntzlab/target.hpp"

namespace muntzlab {

/// Exponents of a monomial family {x^a : a in E} on [0,1]. Validated at
/// construction: pairwise distinct (linear independence) and every a > -1/2
/// (membership in L^2[0,1]).
class ExponentSet {
 public:
  explicit ExponentSet(std::vector<Rational> exponents);

  const std::vector<Rational>& exponents() const { return exps_; }
  std::size_t size() const { return exps_.size(); }
  bool empty() const { return exps_.empty(); }
  const Rational& operator[](std::size_t i) const { return exps_[i]; }

  bool all_integers() const;
  bool contains(const Rational& a) const;

 private:
  std::vector<Rational> exps_;
};

/// Symmetric Gram matrix of the family, G[i][j] = 1/(a_i + a_j + 1).
RatMatrix gram_matrix(const ExponentSet& e);

/// Closed-form determinant of the matrix [1/(x_i - y_j)]:
/// prod_{j<i} (x_i-x_j)(y_j-y_i) / prod_{i,j} (x_i-y_j).
/// A shared node x_i = y_j is a pole and throws std::domain_error.
Rational cauchy_determinant(const std::vector<Rational>& xs,
                            const std::vector<Rational>& ys);

/// det of the Gram matrix via the Cauchy substitution x_i = a_i + 1/2,
/// y_j = -(a_j + 1/2): prod_{j<i} (a_i-a_j)^2 / prod_{i,j} (a_i+a_j+1).
Rational gram_det_closed_form(const ExponentSet& e);

/// Squared distance from t to span{x^a : a in E} as the bordered Gram ratio
/// det G[t, basis] / det G[basis]. The empty set gives ||t||^2. Fractional
/// exponents are accepted only when t is a single-term polynomial (its
/// cross moments against x^a stay exact at u = 1); anything else throws
/// std::domain_error.
Rational distance_sq_via_gram(const Target& t, const ExponentSet& e);

/// Squared distance of the (possibly fractional) monomial x^alpha0 to the
/// span, via the closed form 1/(2*alpha0+1) * prod (a_i-alpha0)^2/(a_i+alpha0+1)^2.
/// By convention alpha0 inside E returns exact zero.
Rational monomial_distance_sq_closed_form(const Rational& alpha0, const ExponentSet& e);

/// Exact-vs-binary64 determinant comparison on one Gram matrix. Timings are
/// wall clock and not deterministic; everything else is.
struct ConditioningReport {
  std::vector<Rational> exponents;
  Rational det_closed;
  Rational det_bareiss;
  double det_float = 0.0;
  double rel_err_float = 0.0;
  std::int64_t t_exact_ns = 0;
  std::int64_t t_float_ns = 0;
};

ConditioningReport conditioning_report(const ExponentSet& e);

}  // namespace muntzlab
