#include "muntzlab/gram.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace muntzlab {

namespace {

bool is_integer(const Rational& r) { return r.den() == 1; }

long to_long(const Rational& r) {
  if (!is_integer(r) || !r.num().fits_slong_p()) {
    throw std::domain_error("exponent does not fit a machine integer");
  }
  return r.num().get_si();
}

std::int64_t elapsed_ns(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

ExponentSet::ExponentSet(std::vector<Rational> exponents) : exps_(std::move(exponents)) {
  const Rational lower(-1, 2);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] <= lower) {
      throw std::invalid_argument("ExponentSet: exponent " + exps_[i].str() +
                                  " is not above -1/2");
    }
    for (std::size_t j = i + 1; j < exps_.size(); ++j) {
      if (exps_[i] == exps_[j]) {
        throw std::invalid_argument("ExponentSet: duplicate exponent " + exps_[i].str());
      }
    }
  }
}

bool ExponentSet::all_integers() const {
  return std::all_of(exps_.begin(), exps_.end(), [](const Rational& r) { return is_integer(r); });
}

bool ExponentSet::contains(const Rational& a) const {
  return std::find(exps_.begin(), exps_.end(), a) != exps_.end();
}

RatMatrix gram_matrix(const ExponentSet& e) {
  const auto n = static_cast<Eigen::Index>(e.size());
  RatMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      Rational entry = Rational(1) / (e[i] + e[j] + Rational(1));
      g(i, j) = entry;
      g(j, i) = entry;
    }
  }
  return g;
}

Rational cauchy_determinant(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) {
    throw std::invalid_argument("cauchy_determinant: node count mismatch");
  }
  const std::size_t n = xs.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (xs[i] == ys[j]) {
        throw std::domain_error("cauchy_determinant: pole x_i = y_j at " + xs[i].str());
      }
    }
  }
  Rational numerator(1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      numerator *= (xs[i] - xs[j]) * (ys[j] - ys[i]);
    }
  }
  Rational denominator(1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      denominator *= xs[i] - ys[j];
    }
  }
  return numerator / denominator;
}

Rational gram_det_closed_form(const ExponentSet& e) {
  const std::size_t n = e.size();
  Rational numerator(1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Rational d = e[i] - e[j];
      numerator *= d * d;
    }
  }
  Rational denominator(1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      denominator *= e[i] + e[j] + Rational(1);
    }
  }
  return numerator / denominator;
}

Rational distance_sq_via_gram(const Target& t, const ExponentSet& e) {
  if (e.empty()) return norm_sq(t, Rational(1));

  const auto n = static_cast<Eigen::Index>(e.size());
  RatMatrix bordered(n + 1, n + 1);
  bordered(0, 0) = norm_sq(t, Rational(1));

  if (e.all_integers()) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const Rational m = moment(t, to_long(e[i]), Rational(1));
      bordered(0, i + 1) = m;
      bordered(i + 1, 0) = m;
    }
  } else {
    // Cross moments of x^k against fractional x^a are exact at u = 1; other
    // targets have no closed form there.
    const Polynomial* p = t.as_polynomial();
    if (p == nullptr || p->coeffs().size() != 1) {
      throw std::domain_error(
          "distance_sq_via_gram: fractional exponents require a single-term "
          "polynomial target");
    }
    const auto [k, a] = *p->coeffs().begin();
    for (Eigen::Index i = 0; i < n; ++i) {
      const Rational m = a / (Rational(k) + e[i] + Rational(1));
      bordered(0, i + 1) = m;
      bordered(i + 1, 0) = m;
    }
  }

  const RatMatrix g = gram_matrix(e);
  bordered.block(1, 1, n, n) = g;
  return bareiss_determinant(bordered) / bareiss_determinant(g);
}

Rational monomial_distance_sq_closed_form(const Rational& alpha0, const ExponentSet& e) {
  if (alpha0 <= Rational(-1, 2)) {
    throw std::invalid_argument("monomial_distance_sq_closed_form: alpha0 must exceed -1/2");
  }
  if (e.contains(alpha0)) return Rational(0);  // target inside the span

  Rational dist_sq = Rational(1) / (Rational(2) * alpha0 + Rational(1));
  for (const Rational& a : e.exponents()) {
    const Rational num = a - alpha0;
    const Rational den = a + alpha0 + Rational(1);
    dist_sq *= (num * num) / (den * den);
  }
  return dist_sq;
}

ConditioningReport conditioning_report(const ExponentSet& e) {
  ConditioningReport report;
  report.exponents = e.exponents();
  report.det_closed = gram_det_closed_form(e);

  const RatMatrix g = gram_matrix(e);
  const auto t0 = std::chrono::steady_clock::now();
  report.det_bareiss = bareiss_determinant(g);
  report.t_exact_ns = elapsed_ns(t0);

  const Eigen::MatrixXd gf = to_double(g);
  const auto t1 = std::chrono::steady_clock::now();
  report.det_float = float_determinant(gf);
  report.t_float_ns = elapsed_ns(t1);

  // Relative error through exact arithmetic, so a binary64 underflow in the
  // tiny determinant cannot masquerade as agreement.
  mpq_class float_exact(report.det_float);
  const Rational err = abs(Rational(float_exact.get_num(), float_exact.get_den()) -
                           report.det_bareiss) /
                       abs(report.det_bareiss);
  report.rel_err_float = err.to_double();
  return report;
}

}  // namespace muntzlab
