#include "muntzlab/cli.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "muntzlab/bernstein.hpp"
#include "muntzlab/gram.hpp"
#include "muntzlab/io.hpp"
#include "muntzlab/operators.hpp"
#include "muntzlab/windows.hpp"

namespace muntzlab {

namespace {

using nlohmann::ordered_json;

void write_summary(std::ostream& out, OutputFormat format, const ordered_json& summary) {
  if (format == OutputFormat::kJson) {
    out << summary.dump() << '\n';
    return;
  }
  std::string header;
  std::string row;
  for (const auto& [key, value] : summary.items()) {
    if (!header.empty()) {
      header += ',';
      row += ',';
    }
    header += key;
    row += value.is_string() ? value.get<std::string>() : value.dump();
  }
  out << header << '\n' << row << '\n';
}

int run_identity_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  long failures = 0;
  for (long t = 0; t < cfg.trials; ++t) {
    auto engine = trial_engine(cfg.seed, t);
    const Polynomial p = random_polynomial(engine, cfg.degree);
    const HardyIdentityTerms terms = hardy_identity_terms(p);
    if (terms.lhs != terms.contraction_term + terms.integral_sq) {
      ++failures;
      err << "identity-check: trial " << t << " broke the identity\n";
    }
  }
  ordered_json summary;
  summary["experiment"] = "identity-check";
  summary["seed"] = cfg.seed;
  summary["trials"] = cfg.trials;
  summary["degree"] = cfg.degree;
  summary["checks"] = cfg.trials;
  summary["failures"] = failures;
  summary["ok"] = failures == 0;
  write_summary(out, parse_format(cfg.format), summary);
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

int run_hardy_norm(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const MonomialOperator hardy = builtin_operator("hardy");
  long failures = 0;
  long checks = 0;
  for (long t = 0; t < cfg.trials; ++t) {
    auto engine = trial_engine(cfg.seed, t);
    const Polynomial p = random_polynomial(engine, cfg.degree);
    const Rational p_sq = inner_product(p, p);
    const Polynomial hp = apply(hardy, p);

    ++checks;
    if (inner_product(hp, hp) > Rational(4) * p_sq) {
      ++failures;
      err << "hardy-norm: trial " << t << " violated ||Hp||^2 <= 4||p||^2\n";
    }
    ++checks;
    const Polynomial contracted = p - hp;
    if (inner_product(contracted, contracted) > p_sq) {
      ++failures;
      err << "hardy-norm: trial " << t << " violated ||(1-H)p||^2 <= ||p||^2\n";
    }
    ++checks;
    const SupGridResult grid = sup_contraction_check(p, cfg.grid_points);
    if (grid.sup_transformed > grid.sup_input + 1e-9) {
      ++failures;
      err << "hardy-norm: trial " << t << " violated the grid sup contraction\n";
    }
  }

  const double lower_bound =
      operator_norm_lower_bound(hardy, cfg.degree, cfg.trials, cfg.seed);
  ++checks;
  if (!(lower_bound >= 1.0 && lower_bound <= 2.0)) {
    ++failures;
    err << "hardy-norm: lower bound " << lower_bound << " escaped [1,2]\n";
  }

  ordered_json summary;
  summary["experiment"] = "hardy-norm";
  summary["seed"] = cfg.seed;
  summary["trials"] = cfg.trials;
  summary["degree"] = cfg.degree;
  summary["grid_points"] = cfg.grid_points;
  summary["norm_lower_bound"] = lower_bound;
  summary["checks"] = checks;
  summary["failures"] = failures;
  summary["ok"] = failures == 0;
  write_summary(out, parse_format(cfg.format), summary);
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

// Distinct integer exponents in [0, max_exponent], deterministic per trial.
ExponentSet random_integer_exponents(std::mt19937_64& engine, long max_exponent,
                                     long max_size) {
  const long limit = std::min(max_size, max_exponent + 1);
  const long size = 1 + static_cast<long>(engine() % static_cast<unsigned long>(limit));
  std::vector<long> pool;
  for (long v = 0; v <= max_exponent; ++v) pool.push_back(v);
  std::vector<Rational> chosen;
  for (long i = 0; i < size; ++i) {
    const auto pick = static_cast<size_t>(engine() % pool.size());
    chosen.emplace_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return ExponentSet(std::move(chosen));
}

int run_gram_det(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  long failures = 0;
  for (long t = 0; t < cfg.trials; ++t) {
    auto engine = trial_engine(cfg.seed, t);
    const ExponentSet e = random_integer_exponents(engine, cfg.max_exponent, cfg.max_size);

    const Rational closed = gram_det_closed_form(e);
    const Rational eliminated = bareiss_determinant(gram_matrix(e));
    std::vector<Rational> xs, ys;
    for (const Rational& a : e.exponents()) {
      xs.push_back(a + Rational(1, 2));
      ys.push_back(-(a + Rational(1, 2)));
    }
    const Rational cauchy = cauchy_determinant(xs, ys);

    if (closed != eliminated || closed != cauchy || closed <= Rational(0)) {
      ++failures;
      err << "gram-det: trial " << t << " routes disagreed\n";
    }
  }
  ordered_json summary;
  summary["experiment"] = "gram-det";
  summary["seed"] = cfg.seed;
  summary["trials"] = cfg.trials;
  summary["max_exponent"] = cfg.max_exponent;
  summary["max_size"] = cfg.max_size;
  summary["checks"] = cfg.trials;
  summary["failures"] = failures;
  summary["ok"] = failures == 0;
  write_summary(out, parse_format(cfg.format), summary);
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

Rational random_small_rational(std::mt19937_64& engine, long num_span) {
  const long num = static_cast<long>(engine() % static_cast<unsigned long>(2 * num_span + 1)) -
                   num_span;
  const long den = 1 + static_cast<long>(engine() % 9);
  return {num, den};
}

int run_cauchy_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  long failures = 0;
  for (long t = 0; t < cfg.trials; ++t) {
    auto engine = trial_engine(cfg.seed, t);
    const long size = 1 + static_cast<long>(engine() % static_cast<unsigned long>(cfg.max_size));

    // Rejection-sample distinct x nodes, distinct y nodes, and no shared node.
    std::vector<Rational> xs, ys;
    while (static_cast<long>(xs.size()) < size) {
      Rational cand = random_small_rational(engine, 20);
      if (std::find(xs.begin(), xs.end(), cand) == xs.end()) xs.push_back(cand);
    }
    while (static_cast<long>(ys.size()) < size) {
      Rational cand = random_small_rational(engine, 20);
      if (std::find(ys.begin(), ys.end(), cand) != ys.end()) continue;
      if (std::find(xs.begin(), xs.end(), cand) != xs.end()) continue;
      ys.push_back(cand);
    }

    RatMatrix m(size, size);
    for (long i = 0; i < size; ++i) {
      for (long j = 0; j < size; ++j) {
        m(i, j) = Rational(1) / (xs[static_cast<size_t>(i)] - ys[static_cast<size_t>(j)]);
      }
    }
    if (cauchy_determinant(xs, ys) != bareiss_determinant(m)) {
      ++failures;
      err << "cauchy-check: trial " << t << " closed form disagreed with elimination\n";
    }
  }
  ordered_json summary;
  summary["experiment"] = "cauchy-check";
  summary["seed"] = cfg.seed;
  summary["trials"] = cfg.trials;
  summary["max_size"] = cfg.max_size;
  summary["checks"] = cfg.trials;
  summary["failures"] = failures;
  summary["ok"] = failures == 0;
  write_summary(out, parse_format(cfg.format), summary);
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

int run_distance(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const DriftWindow w = schedule_for_rho(cfg.rho, cfg.n_max);
  const Target one{Polynomial(Rational(1))};

  const Rational bordered = distance_sq_via_gram(one, w.exponent_set());
  const Rational closed = monomial_distance_sq_closed_form(Rational(0), w.exponent_set());
  const Projection proj = project(one, w);
  const Rational law = rho(w) * rho(w);

  long failures = 0;
  if (bordered != law || closed != law || proj.dist_sq != law) {
    ++failures;
    err << "distance: routes disagreed at n=" << cfg.n_max << "\n";
  }

  RecordWriter writer(out, parse_format(cfg.format));
  writer.write(to_record("distance", SweepPoint{w.n, w.big_n, rho(w), proj.dist_sq}));
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const WindowSchedule sched(cfg.rho);
  const auto points = distance_sweep(Target{Polynomial(Rational(1))}, sched, cfg.n_max);

  long failures = 0;
  RecordWriter writer(out, parse_format(cfg.format));
  for (const SweepPoint& p : points) {
    if (p.dist_sq != p.rho_n * p.rho_n) {
      ++failures;
      err << "sweep: n=" << p.n << " broke the exact rho law\n";
    }
    writer.write(to_record("sweep", p));
  }
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

int run_vanish(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const MonomialOperator op = builtin_operator(cfg.operator_name);
  const auto points = vanishing_preservation_experiment(op, cfg.rho, cfg.n_max);

  long failures = 0;
  RecordWriter writer(out, parse_format(cfg.format));
  for (const VanishPoint& p : points) {
    writer.write(to_record("vanish-" + op.name, p));
  }
  if (cfg.n_max >= 2 && !(points.back().leak_sq < points.front().leak_sq)) {
    ++failures;
    err << "vanish: leak at n=" << cfg.n_max << " did not drop below the n=1 leak\n";
  }
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

int run_continuous(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto points = continuous_case_experiment(cfg.rho, cfg.n_max, cfg.grid_points);

  long failures = 0;
  RecordWriter writer(out, parse_format(cfg.format));
  for (const ContinuousPoint& p : points) {
    writer.write(to_record("continuous", p));
  }
  if (cfg.n_max >= 2 && !(points.back().sup_err < points.front().sup_err)) {
    ++failures;
    err << "continuous: sup error at n=" << cfg.n_max
        << " did not drop below the n=1 error\n";
  }
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

int run_bernstein(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  long failures = 0;
  long checks = 0;

  for (long n = 0; n <= cfg.n_max; ++n) {
    Polynomial sum;
    for (long k = 0; k <= n; ++k) sum += bernstein_basis(k, n);
    ++checks;
    if (!(sum == Polynomial(Rational(1)))) {
      ++failures;
      err << "bernstein: partition of unity failed at n=" << n << "\n";
    }
  }

  for (long n = 1; n <= std::min(cfg.n_max, 8L); ++n) {
    std::vector<Rational> samples;
    for (long k = 0; k <= n; ++k) samples.emplace_back(k, n);
    ++checks;
    if (!(bernstein_approximant(samples, n) == Polynomial::monomial(1, Rational(1)))) {
      ++failures;
      err << "bernstein: linear precision failed at n=" << n << "\n";
    }
  }

  for (long n = 1; n <= std::min(cfg.n_max, 10L); ++n) {
    std::vector<Rational> samples;
    for (long k = 0; k <= n; ++k) samples.push_back(Rational(k, n) * Rational(k, n));
    // B_n(x^2) = x^2 + x(1-x)/n.
    Polynomial expected = Polynomial::monomial(2, Rational(1));
    expected += Polynomial::monomial(1, Rational(1, n));
    expected -= Polynomial::monomial(2, Rational(1, n));
    ++checks;
    if (!(bernstein_approximant(samples, n) == expected)) {
      ++failures;
      err << "bernstein: quadratic law failed at n=" << n << "\n";
    }
  }

  for (long n = 0; n <= cfg.n_max; ++n) {
    for (long m = 0; m < n; ++m) {
      std::vector<Rational> samples(static_cast<size_t>(n) + 1, Rational(0));
      auto engine = trial_engine(cfg.seed, n * 100 + m);
      for (long k = m + 1; k <= n; ++k) {
        samples[static_cast<size_t>(k)] = random_small_rational(engine, 9);
      }
      const auto support = min_support_degree(bernstein_approximant(samples, n));
      ++checks;
      if (support.has_value() && *support <= m) {
        ++failures;
        err << "bernstein: support containment failed at n=" << n << ", m=" << m << "\n";
      }
    }
  }

  ordered_json summary;
  summary["experiment"] = "bernstein";
  summary["seed"] = cfg.seed;
  summary["n_max"] = cfg.n_max;
  summary["checks"] = checks;
  summary["failures"] = failures;
  summary["ok"] = failures == 0;
  write_summary(out, parse_format(cfg.format), summary);
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

int run_conditioning(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<Rational> exps;
  for (long v = 0; v <= cfg.max_exponent; ++v) exps.emplace_back(v);
  const ExponentSet e{std::move(exps)};

  const ConditioningReport report = conditioning_report(e);
  long failures = 0;
  if (report.det_closed != report.det_bareiss) {
    ++failures;
    err << "conditioning: exact determinant paths disagreed\n";
  }

  if (parse_format(cfg.format) == OutputFormat::kJson) {
    out << to_json(report).dump() << '\n';
  } else {
    out << conditioning_csv(report) << '\n';
  }
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

int validate(const RunConfig& cfg, std::ostream& err) {
  const auto usage = [&err](const char* message) {
    err << "muntzlab: " << message << '\n';
    return kExitUsage;
  };
  try {
    parse_format(cfg.format);
  } catch (const std::invalid_argument& e) {
    return usage(e.what());
  }
  if (cfg.trials < 1) return usage("trials must be >= 1");
  if (cfg.degree < 0) return usage("degree must be >= 0");
  if (cfg.grid_points < 2) return usage("grid-points must be >= 2");
  if (cfg.max_exponent < 0) return usage("max-exponent must be >= 0");
  if (cfg.max_size < 1) return usage("max-size must be >= 1");

  const bool windowed = cfg.command == "distance" || cfg.command == "sweep" ||
                        cfg.command == "vanish" || cfg.command == "continuous";
  if (windowed) {
    if (cfg.n_max < 1) return usage("n-max must be >= 1");
    if (cfg.rho <= Rational(0) || cfg.rho >= Rational(1)) {
      return usage("rho must lie strictly between 0 and 1");
    }
  }
  if (cfg.command == "bernstein" && cfg.n_max < 0) return usage("n-max must be >= 0");
  if (cfg.command == "vanish") {
    try {
      builtin_operator(cfg.operator_name);
    } catch (const std::invalid_argument& e) {
      return usage(e.what());
    }
  }
  return kExitOk;
}

}  // namespace

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const int status = validate(cfg, err);
  if (status != kExitOk) return status;

  try {
    if (cfg.command == "identity-check") return run_identity_check(cfg, out, err);
    if (cfg.command == "hardy-norm") return run_hardy_norm(cfg, out, err);
    if (cfg.command == "gram-det") return run_gram_det(cfg, out, err);
    if (cfg.command == "cauchy-check") return run_cauchy_check(cfg, out, err);
    if (cfg.command == "distance") return run_distance(cfg, out, err);
    if (cfg.command == "sweep") return run_sweep(cfg, out, err);
    if (cfg.command == "vanish") return run_vanish(cfg, out, err);
    if (cfg.command == "continuous") return run_continuous(cfg, out, err);
    if (cfg.command == "bernstein") return run_bernstein(cfg, out, err);
    if (cfg.command == "conditioning") return run_conditioning(cfg, out, err);
  } catch (const std::exception& e) {
    err << "muntzlab: " << cfg.command << " failed: " << e.what() << '\n';
    return kExitCheckFailed;
  }

  err << "muntzlab: unknown subcommand '" << cfg.command << "'\n";
  return kExitUsage;
}

}  // namespace muntzlab
