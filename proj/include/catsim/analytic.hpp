// Closed-form laws of the (max,rand) model: the time-t and limiting marginal
// CDFs, joint CDFs, indicator covariance, the staircase CDF of u^G, and the
// probability generating function of the stationary chain value.
#pragma once

#include <span>

namespace catsim::analytic {

// Finite time t >= 0 or the limiting law.
class Horizon {
 public:
  static Horizon finite(long t);
  static Horizon infinite() { return Horizon(-1); }

  bool is_infinite() const { return t_ < 0; }
  long t() const;  // throws std::logic_error on the infinite horizon

 private:
  explicit Horizon(long t) : t_(t) {}
  long t_;
};

// base^exponent by repeated multiplication, exponent >= 0. Used wherever
// bit-exact agreement with the stepwise chain iteration is asserted.
double pow_by_mult(double base, long exponent);

// Time-t marginal CDF: u(1-p)(1-(up)^t)/(1-up) + u^{t+1} p^t.
double phi_t(double u, double p, long t);

// Limiting marginal CDF: u(1-p)/(1-up).
double phi(double u, double p);

// Joint CDF of finitely many sites: phi_t(prod u_k), or phi(prod u_k) on the
// infinite horizon. Throws std::domain_error on an empty list.
double joint_cdf(std::span<const double> us, double p, Horizon horizon);

// Covariance of the stationary indicators 1{eta(1) <= u1}, 1{eta(2) <= u2}:
// (1-p) p u1 u2 (1-u1)(1-u2) / ((1-u1*u2*p)(1-u1*p)(1-u2*p)).
double indicator_cov(double u1, double u2, double p);

// The unique k >= 1 with u^k <= x < u^{k-1}.
long k_index(double x, double u);

// Stationary CDF of u^G: F(x) = p^{k(x)-1}, a right-continuous staircase
// with jumps exactly at x = u^j.
double stationary_theta_cdf(double x, double u, double p);

// E(s^{u^G}) = sum_{k>=1} (1-p) p^{k-1} s^{u^k}, truncated once the geometric
// tail bound p^K drops below tol.
double theta_pgf(double s, double u, double p, double tol);

// E(s^{u * u^G}) = sum_{k>=1} (1-p) p^{k-1} s^{u^{k+1}}, same truncation.
double theta_pgf_shifted(double s, double u, double p, double tol);

}  // namespace catsim::analytic
