#include "catsim/env.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <thread>
#include <vector>

#include <stdexcept>

#include "doctest.h"

#include "catsim/rng.hpp"
#include "catsim/stats.hpp"

using catsim::env::DrawStream;
using catsim::env::EnvStream;
using catsim::env::Params;
using catsim::env::RenewalTrace;

TEST_CASE("params validation") {
  Params ok{0.5, 10, 100, 1};
  CHECK_NOTHROW(ok.validate());
  CHECK_THROWS_AS((Params{0.0, 1, 0, 0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((Params{1.0, 1, 0, 0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((Params{0.5, 0, 0, 0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((Params{0.5, 1, -1, 0}.validate()), std::invalid_argument);
}

TEST_CASE("open_unit never returns an endpoint, even at extreme words") {
  CHECK(catsim::rng::open_unit(0) > 0.0);
  CHECK(catsim::rng::open_unit(~0ull) < 1.0);
  CHECK(catsim::rng::open_unit(0) == 0x1p-53);
  CHECK(catsim::rng::open_unit(~0ull) == 1.0 - 0x1p-53);
}

TEST_CASE("bernoulli_at is a pure function of (seed, t)") {
  const EnvStream a(123, 0.7);
  const EnvStream b(123, 0.7);
  for (long t = 1; t <= 200; ++t) {
    CHECK(a.bernoulli_at(t) == a.bernoulli_at(t));
    CHECK(a.bernoulli_at(t) == b.bernoulli_at(t));
  }
  CHECK_THROWS_AS(a.bernoulli_at(0), std::out_of_range);
}

TEST_CASE("bernoulli mean matches p at binomial-error scale") {
  const EnvStream stream(7, 0.9);
  const long n = 100000;
  long ones = 0;
  for (long t = 1; t <= n; ++t) ones += stream.bernoulli_at(t);
  const double mean = static_cast<double>(ones) / n;
  const double tol = 3.0 * std::sqrt(0.9 * 0.1 / n);
  CHECK(std::abs(mean - 0.9) < tol);
}

TEST_CASE("different seeds give different bit sequences") {
  const EnvStream a(1, 0.5);
  const EnvStream b(2, 0.5);
  bool differ = false;
  for (long t = 1; t <= 100 && !differ; ++t) {
    differ = a.bernoulli_at(t) != b.bernoulli_at(t);
  }
  CHECK(differ);
}

TEST_CASE("uniform_at is deterministic, open-interval, and uniform") {
  const EnvStream stream(99, 0.5);
  CHECK(stream.uniform_at(3, 17) == stream.uniform_at(3, 17));
  CHECK_THROWS_AS(stream.uniform_at(0, 1), std::out_of_range);
  CHECK_THROWS_AS(stream.uniform_at(1, 0), std::out_of_range);

  std::vector<double> draws;
  draws.reserve(100000);
  for (long t = 1; t <= 100; ++t) {
    for (long site = 1; site <= 1000; ++site) {
      const double u = stream.uniform_at(t, site);
      CHECK(u > 0.0);
      CHECK(u < 1.0);
      draws.push_back(u);
    }
  }
  const catsim::stats::EmpiricalCdf cdf(draws);
  const double ks = catsim::stats::ks_distance(cdf, [](double x) { return x; });
  CHECK(ks < 0.01);
}

TEST_CASE("no uniform hits 0 or 1 across a million draws") {
  const EnvStream stream(4242, 0.5);
  for (long t = 1; t <= 1000; ++t) {
    for (long site = 1; site <= 1000; ++site) {
      const double u = stream.uniform_at(t, site);
      if (u <= 0.0 || u >= 1.0) {
        FAIL("endpoint draw at t=", t, " site=", site);
      }
    }
  }
}

namespace {

// Finds a seed whose first bits at p = 0.5 match the pattern exactly.
std::uint64_t seed_with_bits(const std::vector<int>& pattern, double p) {
  for (std::uint64_t seed = 0;; ++seed) {
    const EnvStream stream(seed, p);
    bool match = true;
    for (std::size_t i = 0; i < pattern.size() && match; ++i) {
      match = stream.bernoulli_at(static_cast<long>(i) + 1) == pattern[i];
    }
    if (match) return seed;
  }
}

}  // namespace

TEST_CASE("build_trace enumerates the catastrophe times of the bit sequence") {
  // B = (1,0,1,1,0) -> catastrophes at 2 and 5.
  const std::uint64_t seed = seed_with_bits({1, 0, 1, 1, 0}, 0.5);
  const EnvStream stream(seed, 0.5);
  const auto trace = catsim::env::build_trace(stream, 5);
  CHECK(trace.times == std::vector<long>{2, 5});
  CHECK(trace.catastrophes_up_to(3) == 1);
  CHECK(trace.catastrophes_up_to(5) == 2);
  CHECK(trace.catastrophes_up_to(1) == 0);
}

TEST_CASE("a run with no catastrophes has an empty trace and age t+1") {
  const std::uint64_t seed = seed_with_bits({1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, 0.9);
  const auto trace = catsim::env::build_trace(EnvStream(seed, 0.9), 10);
  CHECK(trace.times.empty());
  CHECK(trace.catastrophes_up_to(10) == 0);
  for (long t = 0; t <= 10; ++t) CHECK(trace.age(t) == t + 1);
}

TEST_CASE("age at a catastrophe time is 1, and hand-built traces enumerate") {
  const RenewalTrace trace{5, {3}};
  CHECK(trace.age(3) == 1);
  CHECK(trace.age(2) == 3);  // no catastrophe yet: t + 1
  CHECK(trace.age(5) == 3);  // 5 + 1 - 3
  CHECK(trace.last_catastrophe_at_or_before(2) == 0);
  CHECK_THROWS_AS(trace.age(6), std::out_of_range);
  CHECK_THROWS_AS(trace.age(-1), std::out_of_range);
}

TEST_CASE("increments of N count catastrophes in the half-open interval") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto trace = catsim::env::build_trace(EnvStream(seed, 0.6), 100);
    for (long s = 0; s <= 100; s += 7) {
      for (long t = s + 1; t <= 100; t += 13) {
        long direct = 0;
        for (const long time : trace.times) {
          if (time > s && time <= t) ++direct;
        }
        CHECK(trace.catastrophes_up_to(t) - trace.catastrophes_up_to(s) == direct);
      }
    }
  }
}

TEST_CASE("pmf_age matches the displayed cases and sums to 1") {
  CHECK(catsim::env::pmf_age(2, 0.7, 3) == doctest::Approx(0.21).epsilon(1e-12));
  CHECK(catsim::env::pmf_age(4, 0.7, 3) == doctest::Approx(std::pow(0.7, 3)));
  for (const double p : {0.1, 0.5, 0.9}) {
    for (const long t : {0L, 1L, 5L, 50L}) {
      double sum = 0.0;
      for (long k = 1; k <= t + 1; ++k) sum += catsim::env::pmf_age(k, p, t);
      CHECK(std::abs(sum - 1.0) < 1e-12);
    }
  }
  CHECK_THROWS_AS(catsim::env::pmf_age(0, 0.5, 3), std::domain_error);
  CHECK_THROWS_AS(catsim::env::pmf_age(5, 0.5, 3), std::domain_error);
}

TEST_CASE("Monte Carlo age distribution matches pmf_age") {
  const double p = 0.7;
  const long t = 50;
  const long reps = 100000;
  const EnvStream base(31337, p);
  std::map<long, std::int64_t> counts;
  for (long r = 0; r < reps; ++r) {
    ++counts[catsim::env::build_trace(base.replica(r), t).age(t)];
  }
  const double err = catsim::stats::pmf_compare(
      counts, [&](long k) { return catsim::env::pmf_age(k, p, t); });
  CHECK(err < 0.005);
}

TEST_CASE("age tail P(age >= s) = p^{s-1} at Monte Carlo scale") {
  const double p = 0.8;
  const long t = 30;
  const long reps = 100000;
  const EnvStream base(555, p);
  std::vector<long> ages;
  ages.reserve(reps);
  for (long r = 0; r < reps; ++r) {
    ages.push_back(catsim::env::build_trace(base.replica(r), t).age(t));
  }
  for (const long s : {1L, 2L, 5L, 10L, 31L}) {
    long hits = 0;
    for (const long a : ages) hits += a >= s ? 1 : 0;
    const double target = std::pow(p, static_cast<double>(s - 1));
    const double se = std::sqrt(target * (1.0 - target) / reps);
    CHECK(std::abs(static_cast<double>(hits) / reps - target) <= 3.0 * se + 1e-12);
  }
}

TEST_CASE("N(t) is Binomial(t, 1-p) in the mean") {
  const double p = 0.7;
  const long t = 50;
  const long reps = 100000;
  const EnvStream base(777, p);
  double sum = 0.0;
  for (long r = 0; r < reps; ++r) {
    sum += static_cast<double>(
        catsim::env::build_trace(base.replica(r), t).catastrophes_up_to(t));
  }
  const double mean = sum / reps;
  const double target = t * (1.0 - p);
  const double se = std::sqrt(t * p * (1.0 - p) / static_cast<double>(reps));
  CHECK(std::abs(mean - target) < 3.0 * se);
}

TEST_CASE("increments of N are uncorrelated with the past") {
  const double p = 0.7;
  const long s = 20, t = 50;
  const long reps = 100000;
  const EnvStream base(901, p);
  std::vector<double> xs, ys;
  xs.reserve(reps);
  ys.reserve(reps);
  for (long r = 0; r < reps; ++r) {
    const auto trace = catsim::env::build_trace(base.replica(r), t);
    const double ns = static_cast<double>(trace.catastrophes_up_to(s));
    xs.push_back(ns);
    ys.push_back(static_cast<double>(trace.catastrophes_up_to(t)) - ns);
  }
  double mx = 0.0, my = 0.0;
  for (long r = 0; r < reps; ++r) {
    mx += xs[r];
    my += ys[r];
  }
  mx /= reps;
  my /= reps;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (long r = 0; r < reps; ++r) {
    sxy += (xs[r] - mx) * (ys[r] - my);
    sxx += (xs[r] - mx) * (xs[r] - mx);
    syy += (ys[r] - my) * (ys[r] - my);
  }
  const double corr = sxy / std::sqrt(sxx * syy);
  CHECK(std::abs(corr) < 3.0 / std::sqrt(static_cast<double>(reps)));
}

TEST_CASE("draw streams are deterministic and sequence-separated") {
  const EnvStream stream(2024, 0.5);
  DrawStream a(stream, 1), a2(stream, 1), b(stream, 2);
  bool differ = false;
  for (int i = 0; i < 50; ++i) {
    const double ua = a.next_uniform();
    CHECK(ua == a2.next_uniform());
    if (ua != b.next_uniform()) differ = true;
  }
  CHECK(differ);
}

TEST_CASE("geometric draws have the right support and first-mass") {
  const EnvStream stream(11, 0.5);
  DrawStream draws(stream, 0);
  const long reps = 100000;
  const double success = 0.3;
  long ones = 0;
  double sum = 0.0;
  for (long r = 0; r < reps; ++r) {
    const long g = draws.next_geometric(success);
    REQUIRE(g >= 1);
    ones += g == 1 ? 1 : 0;
    sum += static_cast<double>(g);
  }
  const double freq1 = static_cast<double>(ones) / reps;
  CHECK(std::abs(freq1 - success) < 3.0 * std::sqrt(success * (1 - success) / reps));
  // mean 1/q, variance (1-q)/q^2
  const double mean = sum / reps;
  const double se = std::sqrt((1 - success) / (success * success) / reps);
  CHECK(std::abs(mean - 1.0 / success) < 3.0 * se);
}

TEST_CASE("queries replay bit-for-bit across threads") {
  const EnvStream stream(140, 0.6);
  std::vector<double> expect;
  for (long t = 1; t <= 2000; ++t) expect.push_back(stream.uniform_at(t, 3));
  std::vector<std::vector<double>> got(4);
  std::vector<std::thread> workers;
  for (auto& out : got) {
    workers.emplace_back([&stream, &out] {
      for (long t = 1; t <= 2000; ++t) out.push_back(stream.uniform_at(t, 3));
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& out : got) CHECK(out == expect);
}

TEST_CASE("the B and U sub-streams look independent") {
  const EnvStream stream(2077, 0.5);
  const long n = 100000;
  double sum_b = 0.0, sum_u = 0.0;
  std::vector<double> bs, us;
  for (long t = 1; t <= n; ++t) {
    bs.push_back(static_cast<double>(stream.bernoulli_at(t)));
    us.push_back(stream.uniform_at(t, 1));
    sum_b += bs.back();
    sum_u += us.back();
  }
  const double mb = sum_b / n, mu = sum_u / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (long i = 0; i < n; ++i) {
    sxy += (bs[i] - mb) * (us[i] - mu);
    sxx += (bs[i] - mb) * (bs[i] - mb);
    syy += (us[i] - mu) * (us[i] - mu);
  }
  CHECK(std::abs(sxy / std::sqrt(sxx * syy)) < 3.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("replica streams are reproducible and mutually distinct") {
  const EnvStream base(5, 0.5);
  const EnvStream r0 = base.replica(0);
  const EnvStream r0b = base.replica(0);
  const EnvStream r1 = base.replica(1);
  CHECK(r0.seed() == r0b.seed());
  CHECK(r0.seed() != r1.seed());
  CHECK(r0.p() == base.p());
}
