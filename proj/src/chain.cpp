#include "catsim/chain.hpp"

#include <stdexcept>

#include "catsim/analytic.hpp"

namespace catsim::chain {

ThetaState step_maxrand(const ThetaState& state, int b) {
  return {state.u, b == 1 ? state.u * state.theta : state.u, state.t + 1};
}

ThetaState step_maxmin(const ThetaState& state, int b) {
  return {state.u,
          b == 1 ? state.u * state.theta
                 : state.u + (1.0 - state.u) * state.theta,
          state.t + 1};
}

ThetaState step_erdos(const ThetaState& state, int b) {
  return {state.u,
          b == 1 ? state.u * state.theta
                 : 1.0 - state.u + state.u * state.theta,
          state.t + 1};
}

double closed_form_theta(double u, const env::RenewalTrace& trace, long t) {
  return analytic::pow_by_mult(u, trace.age(t));
}

double sample_stationary_theta(double u, double p, env::DrawStream& draws) {
  return analytic::pow_by_mult(u, draws.next_geometric(1.0 - p));
}

double theta_infinity_maxmin(double u, double p, double tol,
                             env::DrawStream& draws) {
  if (!(tol > 0.0)) throw std::invalid_argument("theta_infinity_maxmin: tol <= 0");
  // Term k is u^{T_k - k} (1-u)^k <= u (1-u)^k, so the tail after K terms is
  // below (1-u)^{K+1}.
  double sum = 0.0;
  double tail = 1.0 - u;  // (1-u)^{k+1} at k = 0
  long t_k = 0;
  for (long k = 0;; ++k) {
    t_k += draws.next_geometric(1.0 - p);
    sum += analytic::pow_by_mult(u, t_k - k) * analytic::pow_by_mult(1.0 - u, k);
    if (tail < tol) break;
    tail *= 1.0 - u;
  }
  return sum;
}

std::vector<double> run_chain(Kind kind, double u, long t_max,
                              const env::EnvStream& stream) {
  if (!(u > 0.0 && u < 1.0)) throw std::invalid_argument("run_chain: u outside (0,1)");
  if (t_max < 0) throw std::invalid_argument("run_chain: t_max must be >= 0");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(t_max) + 1);
  ThetaState state{u, u, 0};
  out.push_back(state.theta);
  for (long t = 1; t <= t_max; ++t) {
    const int b = stream.bernoulli_at(t);
    switch (kind) {
      case Kind::MaxRand: state = step_maxrand(state, b); break;
      case Kind::MaxMin: state = step_maxmin(state, b); break;
      case Kind::Erdos: state = step_erdos(state, b); break;
    }
    out.push_back(state.theta);
  }
  return out;
}

}  // namespace catsim::chain
