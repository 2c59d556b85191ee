#include "muntzlab/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace muntzlab {

Polynomial Polynomial::monomial(long degree, const Rational& coeff) {
  if (degree < 0) {
    throw std::invalid_argument("Polynomial: negative degree");
  }
  Polynomial p;
  p.set_coeff(degree, coeff);
  return p;
}

Rational Polynomial::coeff(long k) const {
  const auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void Polynomial::set_coeff(long k, const Rational& value) {
  if (k < 0) {
    throw std::invalid_argument("Polynomial: negative degree");
  }
  if (value.is_zero()) {
    coeffs_.erase(k);
  } else {
    coeffs_[k] = value;
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [k, a] : o.coeffs_) {
    set_coeff(k, coeff(k) + a);
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [k, a] : o.coeffs_) {
    set_coeff(k, coeff(k) - a);
  }
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [k, a] : coeffs_) a *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [i, ai] : a.coeffs()) {
    for (const auto& [j, bj] : b.coeffs()) {
      out.set_coeff(i + j, out.coeff(i + j) + ai * bj);
    }
  }
  return out;
}

Rational inner_product(const Polynomial& p, const Polynomial& q) {
  Rational acc(0);
  for (const auto& [i, a] : p.coeffs()) {
    for (const auto& [j, b] : q.coeffs()) {
      acc += a * b / Rational(i + j + 1);
    }
  }
  return acc;
}

Rational integral(const Polynomial& p, const Rational& upper) {
  Rational acc(0);
  for (const auto& [k, a] : p.coeffs()) {
    acc += a * pow(upper, k + 1) / Rational(k + 1);
  }
  return acc;
}

Rational eval_exact(const Polynomial& p, const Rational& x) {
  Rational acc(0);
  long prev = -1;
  // Horner over the nonzero terms, highest degree first.
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    if (prev >= 0) acc *= pow(x, prev - it->first);
    acc += it->second;
    prev = it->first;
  }
  if (prev > 0) acc *= pow(x, prev);
  return acc;
}

double eval_float(const Polynomial& p, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("eval_float: x outside [0,1]");
  }
  double acc = 0.0;
  long prev = -1;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    if (prev >= 0) {
      for (long d = it->first; d < prev; ++d) acc *= x;
    }
    acc += it->second.to_double();
    prev = it->first;
  }
  for (long d = 0; d < prev; ++d) acc *= x;
  return acc;
}

std::vector<Rational> eval_exact_grid(const Polynomial& p, long grid_points) {
  if (grid_points < 2) {
    throw std::invalid_argument("eval_exact_grid: need at least two grid points");
  }
  const long q = grid_points - 1;
  const long deg = p.degree() < 0 ? 0 : p.degree();

  // p(i/q) = N(i) / (D * q^deg) with N(i) = sum_k (c_k * D * q^(deg-k)) i^k.
  mpz_class common_den(1);
  for (const auto& [k, a] : p.coeffs()) {
    mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), a.den().get_mpz_t());
  }
  mpz_class qz(q);
  std::vector<mpz_class> qpow(static_cast<size_t>(deg) + 1);
  qpow[0] = 1;
  for (long j = 1; j <= deg; ++j) qpow[j] = qpow[j - 1] * qz;

  std::vector<mpz_class> weights(static_cast<size_t>(deg) + 1, mpz_class(0));
  for (const auto& [k, a] : p.coeffs()) {
    weights[k] = a.num() * (common_den / a.den()) * qpow[deg - k];
  }
  mpz_class scale = common_den * qpow[deg];

  std::vector<Rational> values;
  values.reserve(static_cast<size_t>(grid_points));
  for (long i = 0; i < grid_points; ++i) {
    mpz_class acc(0);
    for (long k = deg; k >= 0; --k) {
      acc *= i;
      acc += weights[k];
    }
    values.emplace_back(std::move(acc), scale);
  }
  return values;
}

std::string to_string(const Polynomial& p) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& [k, a] : p.coeffs()) {
    if (!first) os << ", ";
    os << "(" << k << ", " << a.str() << ")";
    first = false;
  }
  os << "]";
  return os.str();
}

}  // namespace muntzlab
