#pragma once

#include <optional>
#include <vector>

#include "muntzlab/polynomial.hpp"
#include "muntzlab/rational.hpp"

namespace muntzlab {

/// Exact binomial coefficient C(n, k).
Rational binomial(long n, long k);

/// Monomial-basis expansion of b_{k,n}(x) = C(n,k) x^k (1-x)^(n-k).
/// Requires 0 <= k <= n.
Polynomial bernstein_basis(long k, long n);

/// Approximant sum samples[k] * b_{k,n}, where samples[k] stands for f(k/n)
/// (for n = 0 the single sample is f(0)). samples must have length n+1.
Polynomial bernstein_approximant(const std::vector<Rational>& samples, long n);

/// Smallest degree with a nonzero coefficient; nullopt for the zero polynomial.
std::optional<long> min_support_degree(const Polynomial& p);

}  // namespace muntzlab
