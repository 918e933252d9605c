#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace qcd {

// Running mean/variance over scalar samples; merges are associative so
// chunked reductions give the same result for any worker count.
struct MeanAccumulator {
  double n = 0.0;
  double sum = 0.0;
  double sumsq = 0.0;

  void add(double x) {
    n += 1.0;
    sum += x;
    sumsq += x * x;
  }

  void merge(const MeanAccumulator& o) {
    n += o.n;
    sum += o.sum;
    sumsq += o.sumsq;
  }

  double mean() const { return n > 0.0 ? sum / n : 0.0; }

  double variance() const {
    if (n < 2.0) return 0.0;
    const double v = (sumsq - sum * sum / n) / (n - 1.0);
    return v > 0.0 ? v : 0.0;
  }

  double std_error() const { return n > 0.0 ? std::sqrt(variance() / n) : 0.0; }
};

struct RatioEstimate {
  double value = 0.0;
  double std_error = 0.0;
};

// First and second cross moments of K-variate samples; enough for
// delta-method standard errors of smooth functions of sample means.
template <std::size_t K>
struct Moments {
  double n = 0.0;
  std::array<double, K> sum{};
  std::array<double, K * K> cross{};

  void add(const std::array<double, K>& x) {
    n += 1.0;
    for (std::size_t i = 0; i < K; ++i) {
      sum[i] += x[i];
      for (std::size_t j = i; j < K; ++j) cross[i * K + j] += x[i] * x[j];
    }
  }

  void merge(const Moments& o) {
    n += o.n;
    for (std::size_t i = 0; i < K; ++i) sum[i] += o.sum[i];
    for (std::size_t i = 0; i < K * K; ++i) cross[i] += o.cross[i];
  }

  double mean(std::size_t i) const { return n > 0.0 ? sum[i] / n : 0.0; }

  // Sample covariance of components i, j.
  double covariance(std::size_t i, std::size_t j) const {
    if (n < 2.0) return 0.0;
    const std::size_t a = i <= j ? i : j;
    const std::size_t b = i <= j ? j : i;
    return (cross[a * K + b] - sum[a] * sum[b] / n) / (n - 1.0);
  }

  // Delta-method SE of g(means) given the gradient of g at the means.
  double delta_std_error(const std::array<double, K>& grad) const {
    if (n < 2.0) return 0.0;
    double v = 0.0;
    for (std::size_t i = 0; i < K; ++i)
      for (std::size_t j = 0; j < K; ++j)
        v += grad[i] * grad[j] * covariance(i, j);
    return v > 0.0 ? std::sqrt(v / n) : 0.0;
  }
};

using Moments2 = Moments<2>;
using Moments3 = Moments<3>;

// Ratio of means U/V with a delta-method standard error.
inline RatioEstimate ratio_of_means(const Moments2& m) {
  const double u = m.mean(0);
  const double v = m.mean(1);
  if (v == 0.0) return {0.0, 0.0};
  const double r = u / v;
  return {r, m.delta_std_error({1.0 / v, -r / v})};
}

// (r * D + U) / (r + V) over samples (d, u, v); the integral-delay ratio with
// a deterministic head-start weight r.
inline RatioEstimate weighted_integral_ratio(const Moments3& m, double r) {
  const double d = m.mean(0);
  const double u = m.mean(1);
  const double v = m.mean(2);
  const double denom = r + v;
  if (denom == 0.0) return {0.0, 0.0};
  const double value = (r * d + u) / denom;
  return {value, m.delta_std_error({r / denom, 1.0 / denom, -value / denom})};
}

}  // namespace qcd
