// Empirical validation kit: empirical CDFs, Kolmogorov-Smirnov distances,
// histograms, and frequency/covariance estimators with standard errors.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace catsim::stats {

// Sorted-sample CDF evaluator: a right-continuous step function.
class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(std::vector<double> samples);  // throws when empty

  double eval(double x) const;       // fraction of samples <= x
  double eval_left(double x) const;  // fraction of samples < x

  std::size_t size() const { return sorted_.size(); }
  const std::vector<double>& sorted_samples() const { return sorted_; }

 private:
  std::vector<double> sorted_;
};

// One-sample KS statistic against a (typically continuous) target CDF:
// sup over sample points of max(|F(x_i) - T(x_i)|, |F(x_i-) - T(x_i)|).
double ks_distance(const EmpiricalCdf& cdf,
                   const std::function<double(double)>& target);

// sup |F(z) - T(z)| over the given evaluation points, right values only.
// For right-continuous step targets this is the exact KS distance when the
// points cover the jump locations of both functions.
double sup_abs_diff_at(const EmpiricalCdf& cdf,
                       const std::function<double(double)>& target,
                       std::span<const double> points);

struct Histogram {
  double lo = 0.0;
  double hi = 1.0;
  std::vector<std::int64_t> bins;
  std::int64_t total = 0;     // in-range count, equals the bin sum
  std::int64_t overflow = 0;  // samples outside [lo, hi], never dropped
};

// Fixed-width bins over [lo, hi); the final bin is closed at hi.
Histogram histogram(std::span<const double> samples, double lo, double hi,
                    int bins);

struct CovEstimate {
  double estimate = 0.0;
  double std_err = 0.0;
};

// Sample covariance (denominator N-1) of the indicators 1{x1 <= u1} and
// 1{x2 <= u2}, with a plug-in standard error. Throws on fewer than 2 pairs.
CovEstimate indicator_cov_est(std::span<const std::pair<double, double>> pairs,
                              double u1, double u2);

// Max over observed k of |count/total - pmf(k)|.
double pmf_compare(const std::map<long, std::int64_t>& counts,
                   const std::function<double(long)>& pmf);

}  // namespace catsim::stats
