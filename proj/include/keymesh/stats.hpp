#pragma once

#include <cmath>
#include <cstdint>

namespace keymesh {

/// Wilson score interval for a binomial proportion. Behaves sensibly at
/// proportions near 0 and 1, where connectivity experiments live.
struct WilsonInterval {
  double estimate = 0.0;
  double low = 0.0;
  double high = 0.0;
};

inline WilsonInterval wilson_interval(std::uint64_t successes,
                                      std::uint64_t trials,
                                      double z = 1.959963984540054) {
  WilsonInterval out;
  if (trials == 0) return out;
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  out.estimate = phat;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = phat + z2 / (2.0 * n);
  const double spread =
      z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
  out.low = (center - spread) / denom;
  out.high = (center + spread) / denom;
  return out;
}

/// Mean and (unbiased) standard deviation of a sample, streamed.
class RunningStat {
 public:
  void add(double x) {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
  }
  std::uint64_t count() const { return count_; }
  double mean() const { return mean_; }
  double variance() const {
    return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0;
  }
  double stddev() const { return std::sqrt(variance()); }
  double standard_error() const {
    return count_ > 0 ? stddev() / std::sqrt(static_cast<double>(count_)) : 0.0;
  }

 private:
  std::uint64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

}  // namespace keymesh
