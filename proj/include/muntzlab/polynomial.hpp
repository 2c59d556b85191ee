#pragma once

#include <map>
#include <string>
#include <vector>

#include "muntzlab/rational.hpp"

namespace muntzlab {

/// Sparse polynomial over the exact rationals, an element of L^2[0,1].
/// Canonical form: the coefficient map never stores explicit zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Rational& constant) { set_coeff(0, constant); }

  static Polynomial monomial(long degree, const Rational& coeff);

  const std::map<long, Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Largest degree with a nonzero coefficient; -1 for the zero polynomial.
  long degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
  Rational coeff(long k) const;
  void set_coeff(long k, const Rational& value);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
  friend Polynomial operator*(Polynomial p, const Rational& s) { p *= s; return p; }
  friend Polynomial operator*(const Rational& s, Polynomial p) { p *= s; return p; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::map<long, Rational> coeffs_;
};

/// L^2 inner product on [0,1]: sum of a_i b_j / (i+j+1).
Rational inner_product(const Polynomial& p, const Polynomial& q);

/// Exact integral of p over [0,u].
Rational integral(const Polynomial& p, const Rational& upper);

Rational eval_exact(const Polynomial& p, const Rational& x);

/// Horner evaluation after converting coefficients to binary64.
/// Throws std::domain_error for x outside [0,1].
double eval_float(const Polynomial& p, double x);

/// Exact values of p on the uniform grid {i/(grid_points-1)}. The grid
/// denominator is shared across points, so the evaluation runs as an integer
/// Horner scheme over the common coefficient denominator.
std::vector<Rational> eval_exact_grid(const Polynomial& p, long grid_points);

std::string to_string(const Polynomial& p);

}  // namespace muntzlab
