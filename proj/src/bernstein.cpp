#include "muntzlab/bernstein.hpp"

#include <stdexcept>

namespace muntzlab {

Rational binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) {
    throw std::invalid_argument("binomial: need 0 <= k <= n");
  }
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(std::move(c), mpz_class(1));
}

Polynomial bernstein_basis(long k, long n) {
  if (k < 0 || k > n) {
    throw std::domain_error("bernstein_basis: need 0 <= k <= n");
  }
  // C(n,k) x^k (1-x)^(n-k) expanded termwise via the binomial theorem.
  const Rational lead = binomial(n, k);
  Polynomial p;
  for (long j = 0; j <= n - k; ++j) {
    Rational c = lead * binomial(n - k, j);
    if (j % 2 == 1) c = -c;
    p.set_coeff(k + j, c);
  }
  return p;
}

Polynomial bernstein_approximant(const std::vector<Rational>& samples, long n) {
  if (n < 0 || samples.size() != static_cast<size_t>(n) + 1) {
    throw std::invalid_argument("bernstein_approximant: need exactly n+1 samples");
  }
  Polynomial out;
  for (long k = 0; k <= n; ++k) {
    out += samples[static_cast<size_t>(k)] * bernstein_basis(k, n);
  }
  return out;
}

std::optional<long> min_support_degree(const Polynomial& p) {
  if (p.is_zero()) return std::nullopt;
  return p.coeffs().begin()->first;
}

}  // namespace muntzlab
