#include "catsim/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <utility>

#include "catsim/analytic.hpp"
#include "catsim/chain.hpp"
#include "catsim/field.hpp"
#include "catsim/stats.hpp"

namespace catsim::verify {

namespace {

std::vector<double> unit_grid(int count) {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count));
  for (int i = 1; i <= count; ++i) {
    grid.push_back(static_cast<double>(i) / (count + 1));
  }
  return grid;
}

double binomial_se(double prob, long reps) {
  return std::sqrt(prob * (1.0 - prob) / static_cast<double>(reps));
}

std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

}  // namespace

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

Check make_check(std::string name, double measured, double bound) {
  return {std::move(name), measured, bound, measured <= bound};
}

SuiteResult prop1(double p, long t, long reps, std::uint64_t seed) {
  const env::EnvStream base(seed, p);
  std::map<long, std::int64_t> counts;
  for (long r = 0; r < reps; ++r) {
    const auto trace = env::build_trace(base.replica(static_cast<std::uint64_t>(r)), t);
    ++counts[trace.age(t)];
  }
  const double err = stats::pmf_compare(
      counts, [&](long k) { return env::pmf_age(k, p, t); });
  SuiteResult result{"prop1", {}};
  result.checks.push_back(make_check("max abs pmf error of age(t)", err, 0.005));
  return result;
}

SuiteResult thm1(double p, long t, long reps, std::uint64_t seed) {
  const env::EnvStream base(seed, p);
  std::vector<double> site1;
  site1.reserve(static_cast<std::size_t>(reps));
  long joint_hits = 0;
  for (long r = 0; r < reps; ++r) {
    const auto stream = base.replica(static_cast<std::uint64_t>(r));
    auto f = field::init_field(field::InitialConfig::iid_uniform(), 2, stream);
    for (long s = 1; s <= t; ++s) f = field::step_maxrand_field(f, stream);
    site1.push_back(f.values[0]);
    if (f.values[0] <= 0.5 && f.values[1] <= 0.7) ++joint_hits;
  }
  const stats::EmpiricalCdf cdf(site1);
  SuiteResult result{"thm1", {}};
  for (int i = 1; i <= 9; ++i) {
    const double u = 0.1 * i;
    const double target = analytic::phi_t(u, p, t);
    result.checks.push_back(make_check(
        "marginal CDF deviation at u=" + short_num(u),
        std::abs(cdf.eval(u) - target), 3.0 * binomial_se(target, reps)));
  }
  const double joint_target = analytic::phi_t(0.5 * 0.7, p, t);
  const double joint_freq = static_cast<double>(joint_hits) / static_cast<double>(reps);
  result.checks.push_back(make_check("joint frequency deviation at (0.5, 0.7)",
                                     std::abs(joint_freq - joint_target),
                                     3.0 * binomial_se(joint_target, reps)));
  return result;
}

SuiteResult thm2(double p, long reps, long t_max, long n, std::uint64_t seed) {
  const env::EnvStream base(seed, p);
  const auto cfg_a = field::InitialConfig::constant_value(0.01);
  const auto cfg_b = field::InitialConfig::iid_uniform();
  long merge_violations = 0;
  long tail_hits = 0;  // T_1 > 10
  for (long r = 0; r < reps; ++r) {
    const auto stream = base.replica(static_cast<std::uint64_t>(r));
    const auto coupled = field::couple_run(cfg_a, cfg_b, n, t_max, stream);
    const auto trace = env::build_trace(stream, t_max);
    const long t1 = trace.times.empty() ? t_max + 1 : trace.times.front();
    if (t1 > 10) ++tail_hits;
    for (long t = std::min(t1, t_max + 1); t <= t_max; ++t) {
      if (coupled.run_a[static_cast<std::size_t>(t)].values !=
          coupled.run_b[static_cast<std::size_t>(t)].values) {
        ++merge_violations;
        break;
      }
    }
    if (coupled.first_agreement_time >= 0 && t1 <= t_max &&
        coupled.first_agreement_time > t1) {
      ++merge_violations;
    }
  }
  const double tail_target = std::pow(p, 10.0);
  const double tail_freq = static_cast<double>(tail_hits) / static_cast<double>(reps);
  SuiteResult result{"thm2", {}};
  result.checks.push_back(
      make_check("runs violating exact merge after T_1",
                 static_cast<double>(merge_violations), 0.0));
  result.checks.push_back(make_check("|freq(T_1 > 10) - p^10|",
                                     std::abs(tail_freq - tail_target),
                                     3.0 * binomial_se(tail_target, reps)));
  return result;
}

SuiteResult phi0_identity() {
  double worst = 0.0;
  for (const double u : unit_grid(999)) {
    for (const double p : {0.1, 0.5, 0.9}) {
      worst = std::max(worst, std::abs(analytic::phi_t(u, p, 0) - u));
    }
  }
  SuiteResult result{"phi0", {}};
  result.checks.push_back(make_check("max |phi_0(u) - u| on grid", worst, 1e-15));
  return result;
}

SuiteResult stationarity(double p) {
  double worst = 0.0;
  for (const double u : unit_grid(999)) {
    const double lhs = p * u * analytic::phi(u, p) + (1.0 - p) * u;
    worst = std::max(worst, std::abs(lhs - analytic::phi(u, p)));
  }
  SuiteResult result{"stationarity", {}};
  result.checks.push_back(
      make_check("max |p*u*phi(u) + (1-p)*u - phi(u)| on grid", worst, 1e-12));
  return result;
}

SuiteResult cov_identity(double p) {
  double worst = 0.0;
  for (const double u1 : unit_grid(50)) {
    for (const double u2 : unit_grid(50)) {
      const double closed = analytic::indicator_cov(u1, u2, p);
      const double via_phi = analytic::phi(u1 * u2, p) -
                             analytic::phi(u1, p) * analytic::phi(u2, p);
      worst = std::max(worst, std::abs(closed - via_phi));
    }
  }
  SuiteResult result{"cov-identity", {}};
  result.checks.push_back(make_check(
      "max |cov closed form - (phi(u1u2) - phi(u1)phi(u2))| on 50x50 grid",
      worst, 1e-12));
  return result;
}

SuiteResult chain_eq(double p, double u, long steps, long seeds,
                     std::uint64_t seed) {
  const env::EnvStream base(seed, p);
  long mismatches = 0;
  for (long s = 0; s < seeds; ++s) {
    const auto stream = base.replica(static_cast<std::uint64_t>(s));
    const auto trajectory = chain::run_chain(chain::Kind::MaxRand, u, steps, stream);
    const auto trace = env::build_trace(stream, steps);
    for (long t = 0; t <= steps; ++t) {
      if (trajectory[static_cast<std::size_t>(t)] !=
          chain::closed_form_theta(u, trace, t)) {
        ++mismatches;
      }
    }
  }
  SuiteResult result{"chain-eq", {}};
  result.checks.push_back(make_check("bitwise mismatches vs closed form",
                                     static_cast<double>(mismatches), 0.0));
  return result;
}

SuiteResult pgf(double tol) {
  double worst = 0.0;
  for (const double u : {0.3, 0.5, 0.9}) {
    for (const double p : {0.3, 0.5, 0.9}) {
      for (int i = 1; i <= 9; ++i) {
        const double s = 0.1 * i;
        const double lhs = analytic::theta_pgf(s, u, p, tol);
        const double rhs = (1.0 - p) * std::pow(s, u) +
                           p * analytic::theta_pgf_shifted(s, u, p, tol);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    }
  }
  SuiteResult result{"pgf", {}};
  result.checks.push_back(
      make_check("max one-step PGF stationarity residual", worst, 1e-10));
  return result;
}

SuiteResult maxmin_limit(double u, double p, long samples, long t, double tol,
                         std::uint64_t seed) {
  const env::EnvStream base(seed, p);
  std::vector<double> chain_samples, series_samples;
  chain_samples.reserve(static_cast<std::size_t>(samples));
  series_samples.reserve(static_cast<std::size_t>(samples));
  for (long r = 0; r < samples; ++r) {
    const auto stream = base.replica(static_cast<std::uint64_t>(r));
    chain_samples.push_back(
        chain::run_chain(chain::Kind::MaxMin, u, t, stream).back());
    env::DrawStream draws(base, static_cast<std::uint64_t>(r));
    series_samples.push_back(chain::theta_infinity_maxmin(u, p, tol, draws));
  }
  const stats::EmpiricalCdf cdf_a(chain_samples);
  const stats::EmpiricalCdf cdf_b(series_samples);
  std::vector<double> eval_points = cdf_a.sorted_samples();
  eval_points.insert(eval_points.end(), cdf_b.sorted_samples().begin(),
                     cdf_b.sorted_samples().end());
  const double ks = stats::sup_abs_diff_at(
      cdf_a, [&](double x) { return cdf_b.eval(x); }, eval_points);
  SuiteResult result{"maxmin-limit", {}};
  result.checks.push_back(
      make_check("two-sample KS, chain at t vs limit series", ks, 0.02));
  return result;
}

SuiteResult cov_mc(double u1, double u2, double p, long reps,
                   std::uint64_t seed) {
  const env::EnvStream base(seed, p);
  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(static_cast<std::size_t>(reps));
  for (long r = 0; r < reps; ++r) {
    env::DrawStream draws(base, static_cast<std::uint64_t>(r));
    // One shared age per replica: sites are conditionally iid given the age.
    const long age = draws.next_geometric(1.0 - p);
    double eta1 = 0.0, eta2 = 0.0;
    for (long k = 0; k < age; ++k) eta1 = std::max(eta1, draws.next_uniform());
    for (long k = 0; k < age; ++k) eta2 = std::max(eta2, draws.next_uniform());
    pairs.emplace_back(eta1, eta2);
  }
  const auto est = stats::indicator_cov_est(pairs, u1, u2);
  const double target = analytic::indicator_cov(u1, u2, p);
  SuiteResult result{"cov", {}};
  result.checks.push_back(make_check("|cov estimate - closed form|",
                                     std::abs(est.estimate - target),
                                     3.0 * est.std_err));
  return result;
}

SuiteResult theta_law(double u, double p, long samples, std::uint64_t seed) {
  const env::EnvStream base(seed, p);
  env::DrawStream draws(base, 0);
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(samples));
  for (long r = 0; r < samples; ++r) {
    values.push_back(chain::sample_stationary_theta(u, p, draws));
  }
  const stats::EmpiricalCdf cdf(values);
  // Evaluate at the samples and at the staircase jump points u^j, following
  // the jumps down to where both CDFs are far below the bound.
  std::vector<double> eval_points = cdf.sorted_samples();
  const long deep = 1 + static_cast<long>(
      std::ceil(std::log(1e-6) / std::log(p)));
  for (long j = 1; j <= deep; ++j) {
    eval_points.push_back(analytic::pow_by_mult(u, j));
  }
  const double ks = stats::sup_abs_diff_at(
      cdf, [&](double x) { return analytic::stationary_theta_cdf(x, u, p); },
      eval_points);
  SuiteResult result{"theta-law", {}};
  result.checks.push_back(
      make_check("KS of u^G samples vs staircase CDF", ks, 0.01));
  return result;
}

}  // namespace catsim::verify
