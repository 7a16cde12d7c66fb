// The underlying Markov chains Theta_t(u) for the (max,rand), (max,min) and
// Erdos-type systems: one-step maps, the renewal closed form, stationary
// samplers, and trajectory generation.
#pragma once

#include <vector>

#include "catsim/env.hpp"

namespace catsim::chain {

enum class Kind { MaxRand, MaxMin, Erdos };

struct ThetaState {
  double u = 0.5;      // level, in (0,1)
  double theta = 0.5;  // current chain value, in (0,1]
  long t = 0;
};

// (max,rand): theta' = u*theta on a normal step, u on a catastrophe.
ThetaState step_maxrand(const ThetaState& state, int b);

// (max,min): theta' = u*theta on a normal step, u + (1-u)*theta otherwise.
ThetaState step_maxmin(const ThetaState& state, int b);

// Erdos-type system: theta' = u*theta or 1 - u + u*theta.
ThetaState step_erdos(const ThetaState& state, int b);

// Renewal closed form for the (max,rand) chain: u^{age(t)}, computed by
// repeated multiplication so it agrees bit-for-bit with step_maxrand
// iteration. Throws std::out_of_range when t exceeds the trace horizon.
double closed_form_theta(double u, const env::RenewalTrace& trace, long t);

// One draw from the (max,rand) stationary law u^G, G geometric(1-p).
double sample_stationary_theta(double u, double p, env::DrawStream& draws);

// One draw from the (max,min) limit series sum_k u^{T_k} ((1-u)/u)^k with
// T_k = G_0 + ... + G_k, truncated at the first K with (1-u)^{K+1} < tol.
double theta_infinity_maxmin(double u, double p, double tol,
                             env::DrawStream& draws);

// Trajectory theta_0, ..., theta_{t_max} from theta_0 = u, driven by the
// stream's Bernoulli sub-stream (p comes from the stream).
std::vector<double> run_chain(Kind kind, double u, long t_max,
                              const env::EnvStream& stream);

}  // namespace catsim::chain
