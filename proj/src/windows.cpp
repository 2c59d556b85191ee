#include "muntzlab/windows.hpp"

#include <cmath>
#include <stdexcept>

#include "muntzlab/linalg.hpp"

namespace muntzlab {

namespace {

void check_rho_open(const Rational& rho_target, const char* what) {
  if (rho_target <= Rational(0) || rho_target >= Rational(1)) {
    throw std::domain_error(std::string(what) + ": rho must lie in (0,1)");
  }
}

void check_n_max(long n_max, const char* what) {
  if (n_max < 1) {
    throw std::domain_error(std::string(what) + ": n_max must be >= 1");
  }
}

}  // namespace

std::vector<long> DriftWindow::exponents() const {
  if (n < 0 || big_n < 0) {
    throw std::invalid_argument("DriftWindow: negative parameters");
  }
  std::vector<long> out;
  out.reserve(static_cast<size_t>(big_n) + 1);
  for (long k = n; k <= n + big_n; ++k) out.push_back(k);
  return out;
}

ExponentSet DriftWindow::exponent_set() const {
  std::vector<Rational> exps;
  for (long k : exponents()) exps.emplace_back(k);
  return ExponentSet(std::move(exps));
}

Rational rho(const DriftWindow& w) { return Rational(w.n, w.n + w.big_n + 1); }

WindowSchedule::WindowSchedule(Rational rho_target) : rho_target_(std::move(rho_target)) {
  if (rho_target_ <= Rational(0) || rho_target_ > Rational(1)) {
    throw std::domain_error("WindowSchedule: rho must lie in (0,1]");
  }
}

long WindowSchedule::rule(long n) const {
  if (n < 0) throw std::invalid_argument("WindowSchedule: negative n");
  // round(n (1-rho)/rho), half away from zero; the value is non-negative so
  // this is floor((2a + b) / (2b)) for the fraction a/b.
  const Rational exact = Rational(n) * (Rational(1) - rho_target_) / rho_target_;
  mpz_class q;
  const mpz_class two_a_plus_b = 2 * exact.num() + exact.den();
  const mpz_class two_b = 2 * exact.den();
  mpz_fdiv_q(q.get_mpz_t(), two_a_plus_b.get_mpz_t(), two_b.get_mpz_t());
  if (!q.fits_slong_p()) {
    throw std::overflow_error("WindowSchedule: window width overflow");
  }
  return q.get_si();
}

DriftWindow schedule_for_rho(const Rational& rho_target, long n) {
  return WindowSchedule(rho_target).window(n);
}

Projection project(const Target& t, const DriftWindow& w) {
  const std::vector<long> exps = w.exponents();
  const auto size = static_cast<Eigen::Index>(exps.size());

  const RatMatrix g = gram_matrix(w.exponent_set());
  RatVector b(size);
  for (Eigen::Index i = 0; i < size; ++i) {
    b(i) = moment(t, exps[static_cast<size_t>(i)], Rational(1));
  }
  const RatVector c = solve_exact(g, b);

  Projection result;
  Rational explained(0);
  for (Eigen::Index i = 0; i < size; ++i) {
    result.p.set_coeff(exps[static_cast<size_t>(i)], c(i));
    explained += c(i) * b(i);
  }
  result.dist_sq = norm_sq(t, Rational(1)) - explained;
  return result;
}

std::vector<SweepPoint> distance_sweep(const Target& t, const WindowSchedule& sched,
                                       long n_max) {
  check_n_max(n_max, "distance_sweep");
  std::vector<SweepPoint> out;
  out.reserve(static_cast<size_t>(n_max));
  for (long n = 1; n <= n_max; ++n) {
    const DriftWindow w = sched.window(n);
    out.push_back({n, w.big_n, rho(w), project(t, w).dist_sq});
  }
  return out;
}

VanishPoint vanish_point(const MonomialOperator& op, const Rational& rho_target, long n) {
  check_rho_open(rho_target, "vanish_point");
  const Rational s = rho_target * rho_target;
  const DriftWindow w = schedule_for_rho(rho_target, n);
  const Projection proj = project(Target(IndicatorTail{s}), w);
  const Polynomial transported = apply(op, proj.p);
  return {n, w.big_n, rho(w), proj.dist_sq, norm_sq(Target(transported), s)};
}

std::vector<VanishPoint> vanishing_preservation_experiment(const MonomialOperator& op,
                                                           const Rational& rho_target,
                                                           long n_max) {
  check_rho_open(rho_target, "vanishing_preservation_experiment");
  check_n_max(n_max, "vanishing_preservation_experiment");
  std::vector<VanishPoint> out;
  out.reserve(static_cast<size_t>(n_max));
  for (long n = 1; n <= n_max; ++n) out.push_back(vanish_point(op, rho_target, n));
  return out;
}

ContinuousPoint continuous_point(const Rational& rho_target, long n, long grid_points) {
  check_rho_open(rho_target, "continuous_point");
  if (grid_points < 2) {
    throw std::domain_error("continuous_point: need at least two grid points");
  }
  const Rational s = rho_target * rho_target;
  const DriftWindow w = schedule_for_rho(rho_target, n);

  // g = f' = 2 (x - s)^+; the scale factor rides on the polynomial side.
  const Projection proj = project(Target(RampTail{s}), w);
  const Polynomial p_n = Rational(2) * proj.p;
  const Polynomial v_p = apply(builtin_operator("volterra"), p_n);

  const std::vector<Rational> values = eval_exact_grid(v_p, grid_points);
  const Rational q(grid_points - 1);
  double sup_err = 0.0;
  for (long i = 0; i < grid_points; ++i) {
    const Rational x = Rational(i) / q;
    Rational f(0);
    if (x > s) {
      const Rational d = x - s;
      f = d * d;
    }
    const double err = abs(values[static_cast<size_t>(i)] - f).to_double();
    sup_err = std::max(sup_err, err);
  }

  // dist_sq of the scaled target g = 2 (x-s)^+ is 4x that of the ramp.
  return {n, w.big_n, rho(w), Rational(4) * proj.dist_sq, sup_err};
}

std::vector<ContinuousPoint> continuous_case_experiment(const Rational& rho_target,
                                                        long n_max, long grid_points) {
  check_rho_open(rho_target, "continuous_case_experiment");
  check_n_max(n_max, "continuous_case_experiment");
  std::vector<ContinuousPoint> out;
  out.reserve(static_cast<size_t>(n_max));
  for (long n = 1; n <= n_max; ++n) {
    out.push_back(continuous_point(rho_target, n, grid_points));
  }
  return out;
}

}  // namespace muntzlab
