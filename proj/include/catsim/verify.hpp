// Named verification suites: each runs a Monte Carlo or identity check
// against the model's closed forms and reports measured statistics next to
// their pass bounds. The CLI verify command and the acceptance harness both
// drive these.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace catsim::verify {

struct Check {
  std::string name;
  double measured = 0.0;
  double bound = 0.0;
  bool pass = false;  // measured <= bound
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;
  bool passed() const;
};

Check make_check(std::string name, double measured, double bound);

// Age pmf at horizon t vs the geometric closed form (max abs error).
SuiteResult prop1(double p, long t, long reps, std::uint64_t seed);

// Marginal CDF at u = 0.1..0.9 and the joint event {eta(1)<=0.5, eta(2)<=0.7}
// vs phi_t, each within 3 binomial standard errors.
SuiteResult thm1(double p, long t, long reps, std::uint64_t seed);

// Coupled runs from constant(0.01) vs iid-uniform starts: exact agreement
// from the first catastrophe on, and the geometric tail of T_1.
SuiteResult thm2(double p, long reps, long t_max, long n, std::uint64_t seed);

// phi_0(u) = u on a 999-point grid (to 1e-15).
SuiteResult phi0_identity();

// Residual of p*u*phi(u) + (1-p)*u = phi(u) on a 999-point grid.
SuiteResult stationarity(double p);

// Closed-form covariance vs phi(u1*u2) - phi(u1)*phi(u2) on a 50x50 grid.
SuiteResult cov_identity(double p);

// Stepwise chain iteration vs the renewal closed form, bit-exact.
SuiteResult chain_eq(double p, double u, long steps, long seeds,
                     std::uint64_t seed);

// One-step PGF stationarity residual over s in {0.1..0.9} and
// (u, p) in {0.3, 0.5, 0.9}^2.
SuiteResult pgf(double tol);

// Long-run (max,min) chain samples vs truncated limit-series samples,
// two-sample KS distance.
SuiteResult maxmin_limit(double u, double p, long samples, long t, double tol,
                         std::uint64_t seed);

// Stationary-field indicator covariance vs the closed form, 3 standard errors.
SuiteResult cov_mc(double u1, double u2, double p, long reps,
                   std::uint64_t seed);

// Samples of u^G vs the staircase CDF, KS evaluated at sample points and at
// the jump points u^j.
SuiteResult theta_law(double u, double p, long samples, std::uint64_t seed);

}  // namespace catsim::verify
