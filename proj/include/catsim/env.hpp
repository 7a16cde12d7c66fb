// Deterministic environment randomness and the renewal structure built on it:
// the Bernoulli step/catastrophe indicators B_t, the per-site uniforms U_t(n),
// and the catastrophe-time trace T_1 < T_2 < ... with N(t) and age queries.
#pragma once

#include <cstdint>
#include <vector>

#include "catsim/rng.hpp"

namespace catsim::env {

// Shared run parameters.
struct Params {
  double p = 0.5;          // probability of a normal (non-catastrophe) step
  long n = 1;              // site count
  long t_max = 0;          // horizon
  std::uint64_t seed = 0;  // reproducibility key

  // Throws std::invalid_argument unless 0 < p < 1, n >= 1, t_max >= 0.
  void validate() const;
};

// Seed-addressable source of the environment variables. All queries are pure
// functions of (seed, coordinates): immutable, replayable, thread-safe.
// B values and U values come from disjoint counter channels.
class EnvStream {
 public:
  EnvStream(std::uint64_t seed, double p);
  explicit EnvStream(const Params& params);

  std::uint64_t seed() const { return seed_; }
  double p() const { return p_; }

  // B_t for t >= 1: 1 with probability p, 0 with probability 1-p.
  int bernoulli_at(long t) const;

  // U_t(site) for t >= 1, site >= 1, strictly inside (0,1).
  double uniform_at(long t, long site) const;

  // Dedicated t = 0 uniform sub-stream for initial configurations.
  double init_uniform_at(long site) const;

  // Independently seeded stream for replica `index`; same p.
  EnvStream replica(std::uint64_t index) const;

 private:
  std::uint64_t seed_;
  double p_;
};

// Sequential uniform/geometric draws from one sub-stream of an EnvStream.
// Distinct `sequence` ids give statistically independent sequences.
class DrawStream {
 public:
  explicit DrawStream(const EnvStream& stream, std::uint64_t sequence = 0);

  double next_uniform();  // strictly inside (0,1)

  // Geometric on {1,2,...} with the given success probability:
  // P(G = k) = (1-q)^{k-1} q, sampled by inversion from one uniform.
  long next_geometric(double success);

 private:
  std::uint64_t seed_;
  std::uint64_t sequence_;
  std::uint64_t pos_ = 0;
};

// Ordered catastrophe times up to a horizon, with T_0 = 0 implicit.
struct RenewalTrace {
  long horizon = 0;
  std::vector<long> times;  // strictly increasing, each in [1, horizon]

  // N(t): number of catastrophes in [1, t].
  long catastrophes_up_to(long t) const;

  // T_{N(t)}: last catastrophe time <= t, or 0 when none.
  long last_catastrophe_at_or_before(long t) const;

  // t + 1 - T_{N(t)}, in {1, ..., t+1}. Throws std::out_of_range unless
  // 0 <= t <= horizon.
  long age(long t) const;
};

// Collects all s in [1, t_max] with B_s = 0.
RenewalTrace build_trace(const EnvStream& stream, long t_max);

// P(age = k) at horizon t: (1-p) p^{k-1} for 1 <= k <= t, p^t for k = t+1.
// Throws std::domain_error for k outside [1, t+1].
double pmf_age(long k, double p, long t);

}  // namespace catsim::env
