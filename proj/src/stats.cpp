#include "catsim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace catsim::stats {

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples)
    : sorted_(std::move(samples)) {
  if (sorted_.empty()) {
    throw std::invalid_argument("EmpiricalCdf: empty sample set");
  }
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::eval(double x) const {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) /
         static_cast<double>(sorted_.size());
}

double EmpiricalCdf::eval_left(double x) const {
  const auto it = std::lower_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) /
         static_cast<double>(sorted_.size());
}

double ks_distance(const EmpiricalCdf& cdf,
                   const std::function<double(double)>& target) {
  const auto& xs = cdf.sorted_samples();
  const double n = static_cast<double>(xs.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double t = target(xs[i]);
    const double above = static_cast<double>(i + 1) / n - t;
    const double below = t - static_cast<double>(i) / n;
    sup = std::max(sup, std::max(above, below));
  }
  return sup;
}

double sup_abs_diff_at(const EmpiricalCdf& cdf,
                       const std::function<double(double)>& target,
                       std::span<const double> points) {
  double sup = 0.0;
  for (const double z : points) {
    sup = std::max(sup, std::abs(cdf.eval(z) - target(z)));
  }
  return sup;
}

Histogram histogram(std::span<const double> samples, double lo, double hi,
                    int bins) {
  if (!(lo < hi)) throw std::invalid_argument("histogram: lo must be < hi");
  if (bins < 1) throw std::invalid_argument("histogram: bins must be >= 1");
  Histogram h;
  h.lo = lo;
  h.hi = hi;
  h.bins.assign(static_cast<std::size_t>(bins), 0);
  const double width = (hi - lo) / bins;
  for (const double s : samples) {
    if (s < lo || s > hi) {
      ++h.overflow;
      continue;
    }
    auto idx = static_cast<long>((s - lo) / width);
    idx = std::min<long>(idx, bins - 1);  // hi lands in the last bin
    ++h.bins[static_cast<std::size_t>(idx)];
    ++h.total;
  }
  return h;
}

CovEstimate indicator_cov_est(std::span<const std::pair<double, double>> pairs,
                              double u1, double u2) {
  const std::size_t n = pairs.size();
  if (n < 2) throw std::invalid_argument("indicator_cov_est: need >= 2 pairs");
  double sum_x = 0.0, sum_y = 0.0;
  for (const auto& [a, b] : pairs) {
    sum_x += a <= u1 ? 1.0 : 0.0;
    sum_y += b <= u2 ? 1.0 : 0.0;
  }
  const double mean_x = sum_x / static_cast<double>(n);
  const double mean_y = sum_y / static_cast<double>(n);
  double sum_z = 0.0, sum_z2 = 0.0;
  for (const auto& [a, b] : pairs) {
    const double z = ((a <= u1 ? 1.0 : 0.0) - mean_x) *
                     ((b <= u2 ? 1.0 : 0.0) - mean_y);
    sum_z += z;
    sum_z2 += z * z;
  }
  const double nd = static_cast<double>(n);
  CovEstimate est;
  est.estimate = sum_z / (nd - 1.0);
  const double mean_z = sum_z / nd;
  const double var_z = std::max(0.0, (sum_z2 - nd * mean_z * mean_z) / (nd - 1.0));
  est.std_err = std::sqrt(var_z / nd);
  return est;
}

double pmf_compare(const std::map<long, std::int64_t>& counts,
                   const std::function<double(long)>& pmf) {
  std::int64_t total = 0;
  for (const auto& [k, c] : counts) total += c;
  if (total <= 0) throw std::invalid_argument("pmf_compare: total count is 0");
  double max_err = 0.0;
  for (const auto& [k, c] : counts) {
    const double freq = static_cast<double>(c) / static_cast<double>(total);
    max_err = std::max(max_err, std::abs(freq - pmf(k)));
  }
  return max_err;
}

}  // namespace catsim::stats
