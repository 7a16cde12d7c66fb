#include "catsim/analytic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace catsim::analytic {

namespace {

void check_unit_open(double v, const char* name) {
  if (!(v > 0.0 && v < 1.0)) {
    throw std::domain_error(std::string(name) +
                            " must lie strictly in (0,1), got " +
                            std::to_string(v));
  }
}

}  // namespace

Horizon Horizon::finite(long t) {
  if (t < 0) throw std::invalid_argument("Horizon::finite: t must be >= 0");
  return Horizon(t);
}

long Horizon::t() const {
  if (is_infinite()) throw std::logic_error("Horizon::t on infinite horizon");
  return t_;
}

double pow_by_mult(double base, long exponent) {
  if (exponent < 0) throw std::invalid_argument("pow_by_mult: exponent < 0");
  double r = 1.0;
  for (long i = 0; i < exponent; ++i) r *= base;
  return r;
}

double phi_t(double u, double p, long t) {
  check_unit_open(u, "u");
  check_unit_open(p, "p");
  if (t < 0) throw std::invalid_argument("phi_t: t must be >= 0");
  const double up = u * p;
  const double up_t = std::pow(up, static_cast<double>(t));
  // u^{t+1} p^t written as u*(up)^t so large t underflows gracefully to phi.
  return u * (1.0 - p) * (1.0 - up_t) / (1.0 - up) + u * up_t;
}

double phi(double u, double p) {
  check_unit_open(u, "u");
  check_unit_open(p, "p");
  return u * (1.0 - p) / (1.0 - u * p);
}

double joint_cdf(std::span<const double> us, double p, Horizon horizon) {
  if (us.empty()) throw std::domain_error("joint_cdf: empty level list");
  double prod = 1.0;
  for (const double u : us) {
    check_unit_open(u, "u");
    prod *= u;
  }
  // The product can underflow for very long lists; 0 is the continuous limit.
  if (prod == 0.0) return 0.0;
  return horizon.is_infinite() ? phi(prod, p) : phi_t(prod, p, horizon.t());
}

double indicator_cov(double u1, double u2, double p) {
  check_unit_open(u1, "u1");
  check_unit_open(u2, "u2");
  check_unit_open(p, "p");
  return (1.0 - p) * p * u1 * u2 * (1.0 - u1) * (1.0 - u2) /
         ((1.0 - u1 * u2 * p) * (1.0 - u1 * p) * (1.0 - u2 * p));
}

long k_index(double x, double u) {
  check_unit_open(x, "x");
  check_unit_open(u, "u");
  long k = static_cast<long>(std::ceil(std::log(x) / std::log(u)));
  if (k < 1) k = 1;
  // The log estimate can be off by an ulp at the jump points; fix it against
  // the same repeated-multiplication powers the staircase jumps live at.
  while (pow_by_mult(u, k) > x) ++k;
  while (k > 1 && pow_by_mult(u, k - 1) <= x) --k;
  return k;
}

double stationary_theta_cdf(double x, double u, double p) {
  check_unit_open(p, "p");
  return pow_by_mult(p, k_index(x, u) - 1);
}

namespace {

double pgf_series(double s, double u, double p, double tol, bool shifted) {
  if (!(s >= 0.0 && s <= 1.0)) throw std::domain_error("pgf: s must lie in [0,1]");
  check_unit_open(u, "u");
  check_unit_open(p, "p");
  if (!(tol > 0.0)) throw std::invalid_argument("pgf: tol must be > 0");
  // Tail after K terms is bounded by p^K.
  const long terms = std::max(
      1L, static_cast<long>(std::ceil(std::log(tol) / std::log(p))));
  double u_pow = shifted ? u * u : u;  // u^{k+1} or u^k at k = 1
  double p_pow = 1.0;                  // p^{k-1}
  double sum = 0.0;
  for (long k = 1; k <= terms; ++k) {
    sum += (1.0 - p) * p_pow * std::pow(s, u_pow);
    u_pow *= u;
    p_pow *= p;
  }
  return sum;
}

}  // namespace

double theta_pgf(double s, double u, double p, double tol) {
  return pgf_series(s, u, p, tol, false);
}

double theta_pgf_shifted(double s, double u, double p, double tol) {
  return pgf_series(s, u, p, tol, true);
}

}  // namespace catsim::analytic
