#pragma once

#include <vector>

#include "muntzlab/gram.hpp"
#include "muntzlab/operators.hpp"
#include "muntzlab/polynomial.hpp"
#include "muntzlab/target.hpp"

namespace muntzlab {

/// Consecutive exponent block {n, n+1, ..., n+big_n} and its monomial span.
struct DriftWindow {
  long n = 0;
  long big_n = 0;

  std::vector<long> exponents() const;
  ExponentSet exponent_set() const;
};

/// Density defect of the window: n / (n + big_n + 1).
Rational rho(const DriftWindow& w);

/// Widening rule big_n(n) = round(n (1-rho)/rho), ties away from zero, chosen
/// so that n / (n + big_n(n)) tends to rho.
class WindowSchedule {
 public:
  explicit WindowSchedule(Rational rho_target);

  const Rational& rho_target() const { return rho_target_; }
  long rule(long n) const;
  DriftWindow window(long n) const { return {n, rule(n)}; }

 private:
  Rational rho_target_;
};

DriftWindow schedule_for_rho(const Rational& rho_target, long n);

struct Projection {
  Polynomial p;      // the minimizer inside the span
  Rational dist_sq;  // exact squared distance to the span
};

/// Orthogonal projection of t onto the window span via the exact Gram normal
/// equations. The residual is exactly orthogonal to every basis monomial.
Projection project(const Target& t, const DriftWindow& w);

struct SweepPoint {
  long n = 0;
  long big_n = 0;
  Rational rho_n;
  Rational dist_sq;
};

/// Exact squared distances from t to the scheduled windows, n = 1..n_max.
std::vector<SweepPoint> distance_sweep(const Target& t, const WindowSchedule& sched,
                                       long n_max);

struct VanishPoint {
  long n = 0;
  long big_n = 0;
  Rational rho_n;
  Rational dist_sq;  // distance of chi_[rho^2,1] to the window span
  Rational leak_sq;  // integral over [0,rho^2] of (T p_n)^2
};

/// Single step of the vanishing-preservation experiment at window index n.
VanishPoint vanish_point(const MonomialOperator& op, const Rational& rho_target, long n);

/// Projects chi_[s,1] (s = rho^2) onto each scheduled window, applies T to the
/// projection and measures the exact leak of T p_n outside L^2[s,1].
std::vector<VanishPoint> vanishing_preservation_experiment(const MonomialOperator& op,
                                                           const Rational& rho_target,
                                                           long n_max);

struct ContinuousPoint {
  long n = 0;
  long big_n = 0;
  Rational rho_n;
  Rational dist_sq;  // distance of g = 2(x-s)^+ to the window span
  double sup_err = 0.0;
};

/// Single step of the sup-norm experiment at window index n.
ContinuousPoint continuous_point(const Rational& rho_target, long n, long grid_points);

/// Approximates f = ((x-s)^+)^2 through f = Vg with g = f' = 2(x-s)^+:
/// projects g onto each window, applies the Volterra operator and reports the
/// uniform-grid sup error of V p_n against f. Grid values are computed in
/// exact arithmetic before the final float conversion, so large projection
/// coefficients cannot inject cancellation noise.
std::vector<ContinuousPoint> continuous_case_experiment(const Rational& rho_target,
                                                        long n_max, long grid_points);

}  // namespace muntzlab
