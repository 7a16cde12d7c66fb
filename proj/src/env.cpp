#include "catsim/env.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace catsim::env {

namespace {

// Counter channels. The high byte keeps the sub-streams disjoint; the low
// 56 bits carry a site or sequence id.
constexpr std::uint64_t kChanBernoulli = 0x01ull << 56;
constexpr std::uint64_t kChanSiteUniform = 0x02ull << 56;
constexpr std::uint64_t kChanInitUniform = 0x03ull << 56;
constexpr std::uint64_t kChanDraw = 0x04ull << 56;
constexpr std::uint64_t kChanReplica = 0x05ull << 56;

void check_probability(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("p must lie strictly in (0,1), got " +
                                std::to_string(p));
  }
}

}  // namespace

void Params::validate() const {
  check_probability(p);
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (t_max < 0) throw std::invalid_argument("t_max must be >= 0");
}

EnvStream::EnvStream(std::uint64_t seed, double p) : seed_(seed), p_(p) {
  check_probability(p);
}

EnvStream::EnvStream(const Params& params) : seed_(params.seed), p_(params.p) {
  params.validate();
}

int EnvStream::bernoulli_at(long t) const {
  if (t < 1) throw std::out_of_range("bernoulli_at: t is indexed from 1");
  const double u = rng::open_unit(
      rng::word_at(seed_, static_cast<std::uint64_t>(t), kChanBernoulli));
  return u < p_ ? 1 : 0;
}

double EnvStream::uniform_at(long t, long site) const {
  if (t < 1) throw std::out_of_range("uniform_at: t is indexed from 1");
  if (site < 1) throw std::out_of_range("uniform_at: site is indexed from 1");
  return rng::open_unit(rng::word_at(
      seed_, static_cast<std::uint64_t>(t),
      kChanSiteUniform | static_cast<std::uint64_t>(site)));
}

double EnvStream::init_uniform_at(long site) const {
  if (site < 1) throw std::out_of_range("init_uniform_at: site is indexed from 1");
  return rng::open_unit(rng::word_at(
      seed_, 0, kChanInitUniform | static_cast<std::uint64_t>(site)));
}

EnvStream EnvStream::replica(std::uint64_t index) const {
  return EnvStream(rng::word_at(seed_, index, kChanReplica), p_);
}

DrawStream::DrawStream(const EnvStream& stream, std::uint64_t sequence)
    : seed_(stream.seed()), sequence_(sequence) {}

double DrawStream::next_uniform() {
  return rng::open_unit(
      rng::word_at(seed_, pos_++, kChanDraw | sequence_));
}

long DrawStream::next_geometric(double success) {
  check_probability(success);
  const double u = next_uniform();
  // P(G >= k) = (1-success)^{k-1}; inversion keeps G >= 1 for u in (0,1).
  const long g = static_cast<long>(
      std::ceil(std::log(u) / std::log(1.0 - success)));
  return std::max(g, 1L);
}

long RenewalTrace::catastrophes_up_to(long t) const {
  const auto it = std::upper_bound(times.begin(), times.end(), t);
  return static_cast<long>(it - times.begin());
}

long RenewalTrace::last_catastrophe_at_or_before(long t) const {
  const long n = catastrophes_up_to(t);
  return n == 0 ? 0 : times[static_cast<std::size_t>(n - 1)];
}

long RenewalTrace::age(long t) const {
  if (t < 0 || t > horizon) {
    throw std::out_of_range("age: t must lie in [0, horizon]");
  }
  return t + 1 - last_catastrophe_at_or_before(t);
}

RenewalTrace build_trace(const EnvStream& stream, long t_max) {
  if (t_max < 0) throw std::invalid_argument("build_trace: t_max must be >= 0");
  RenewalTrace trace;
  trace.horizon = t_max;
  for (long s = 1; s <= t_max; ++s) {
    if (stream.bernoulli_at(s) == 0) trace.times.push_back(s);
  }
  return trace;
}

double pmf_age(long k, double p, long t) {
  check_probability(p);
  if (t < 0) throw std::invalid_argument("pmf_age: t must be >= 0");
  if (k < 1 || k > t + 1) {
    throw std::domain_error("pmf_age: k must lie in [1, t+1]");
  }
  if (k == t + 1) return std::pow(p, static_cast<double>(t));
  return (1.0 - p) * std::pow(p, static_cast<double>(k - 1));
}

}  // namespace catsim::env
