#include "qcd/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "qcd/errors.hpp"
#include "qcd/stats.hpp"

namespace qcd {

namespace {

constexpr std::uint64_t kSelfCheckSeed = 0x5EEDC0FFEEULL;
constexpr int kSelfCheckDraws = 4096;

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

}  // namespace

ChangePointModel::ChangePointModel(Kind kind, std::string name, double a, double b, double c)
    : kind_(kind), name_(std::move(name)), a_(a), b_(b), c_(c) {}

ChangePointModel ChangePointModel::gaussian_mean_shift(double mu0, double mu1, double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(mu0) || !std::isfinite(mu1))
    throw ModelConfigError("gaussian model: sigma must be positive and means finite");
  if (mu0 == mu1)
    throw ModelConfigError("gaussian model: pre and post means must differ");
  ChangePointModel m(Kind::gaussian, "gaussian", mu0, mu1, sigma);
  m.theta_ = (mu1 - mu0) / sigma;
  m.kl_closed_ = 0.5 * m.theta_ * m.theta_;
  m.check_distinguishable();
  return m;
}

ChangePointModel ChangePointModel::exponential_rate_change(double rate0, double rate1) {
  if (!(rate0 > 0.0) || !(rate1 > 0.0))
    throw ModelConfigError("exponential model: rates must be positive");
  if (rate0 == rate1)
    throw ModelConfigError("exponential model: pre and post rates must differ");
  ChangePointModel m(Kind::exponential, "exponential", rate0, rate1, 0.0);
  m.kl_closed_ = std::log(rate1 / rate0) - (rate1 - rate0) / rate1;
  m.check_distinguishable();
  return m;
}

ChangePointModel ChangePointModel::bernoulli_rate_change(double p0, double p1) {
  if (!(p0 > 0.0) || !(p0 < 1.0) || !(p1 > 0.0) || !(p1 < 1.0))
    throw ModelConfigError("bernoulli model: success probabilities must lie in (0,1)");
  if (p0 == p1)
    throw ModelConfigError("bernoulli model: pre and post probabilities must differ");
  ChangePointModel m(Kind::bernoulli, "bernoulli", p0, p1, 0.0);
  m.arithmetic_ = true;
  m.kl_closed_ =
      p1 * std::log(p1 / p0) + (1.0 - p1) * std::log((1.0 - p1) / (1.0 - p0));
  m.check_distinguishable();
  return m;
}

ChangePointModel ChangePointModel::constant_lr(double lr) {
  if (!(lr > 0.0) || !std::isfinite(lr))
    throw ModelConfigError("constant-lr model: likelihood ratio must be positive and finite");
  ChangePointModel m(Kind::constant, "constant-lr", lr, 0.0, 0.0);
  m.arithmetic_ = true;
  m.kl_closed_ = std::log(lr);
  return m;
}

std::string ChangePointModel::params_key() const {
  char buf[128];
  switch (kind_) {
    case Kind::gaussian:
      std::snprintf(buf, sizeof(buf), "gaussian(mu0=%g,mu1=%g,sigma=%g)", a_, b_, c_);
      break;
    case Kind::exponential:
      std::snprintf(buf, sizeof(buf), "exponential(rate0=%g,rate1=%g)", a_, b_);
      break;
    case Kind::bernoulli:
      std::snprintf(buf, sizeof(buf), "bernoulli(p0=%g,p1=%g)", a_, b_);
      break;
    case Kind::constant:
      std::snprintf(buf, sizeof(buf), "constant-lr(lr=%g)", a_);
      break;
  }
  return buf;
}

double ChangePointModel::sample(Regime regime, Rng& rng) const {
  const bool post = regime == Regime::post;
  switch (kind_) {
    case Kind::gaussian:
      return (post ? b_ : a_) + c_ * rng.gaussian();
    case Kind::exponential:
      return rng.exponential(post ? b_ : a_);
    case Kind::bernoulli:
      return rng.bernoulli(post ? b_ : a_) ? 1.0 : 0.0;
    case Kind::constant:
      return 0.0;
  }
  return 0.0;
}

double ChangePointModel::log_lr(double x) const {
  double value = 0.0;
  switch (kind_) {
    case Kind::gaussian:
      value = (theta_ / c_) * (x - 0.5 * (a_ + b_));
      break;
    case Kind::exponential:
      if (x < 0.0) throw ModelSupportError("exponential model: observation below support");
      value = std::log(b_ / a_) - (b_ - a_) * x;
      break;
    case Kind::bernoulli:
      if (x != 0.0 && x != 1.0)
        throw ModelSupportError("bernoulli model: observation must be 0 or 1");
      value = x == 1.0 ? std::log(b_ / a_) : std::log((1.0 - b_) / (1.0 - a_));
      break;
    case Kind::constant:
      value = std::log(a_);
      break;
  }
  if (!std::isfinite(value))
    throw ModelSupportError("log likelihood ratio is not finite at the given observation");
  return value;
}

double ChangePointModel::sample_log_lr(Regime regime, Rng& rng) const {
  const bool post = regime == Regime::post;
  switch (kind_) {
    case Kind::gaussian: {
      // log LR is Gaussian with mean -theta^2/2 (pre) or +theta^2/2 (post).
      const double half_kl = 0.5 * theta_ * theta_;
      return (post ? half_kl : -half_kl) + theta_ * rng.gaussian();
    }
    case Kind::exponential: {
      const double x = rng.exponential(post ? b_ : a_);
      return std::log(b_ / a_) - (b_ - a_) * x;
    }
    case Kind::bernoulli: {
      const bool one = rng.bernoulli(post ? b_ : a_);
      return one ? std::log(b_ / a_) : std::log((1.0 - b_) / (1.0 - a_));
    }
    case Kind::constant:
      return std::log(a_);
  }
  return 0.0;
}

double ChangePointModel::pre_log_lr_cdf(double z) const {
  switch (kind_) {
    case Kind::gaussian: {
      const double half_kl = 0.5 * theta_ * theta_;
      return normal_cdf((z + half_kl) / std::abs(theta_));
    }
    case Kind::exponential: {
      const double c = std::log(b_ / a_);
      const double d = b_ - a_;  // log LR = c - d x, x ~ Exp(rate0)
      if (d > 0.0) {
        if (z >= c) return 1.0;
        return std::exp(-a_ * (c - z) / d);
      }
      if (z < c) return 0.0;
      return 1.0 - std::exp(-a_ * (z - c) / (-d));
    }
    case Kind::bernoulli: {
      const double z_one = std::log(b_ / a_);
      const double z_zero = std::log((1.0 - b_) / (1.0 - a_));
      double cdf = 0.0;
      if (z_zero <= z) cdf += 1.0 - a_;
      if (z_one <= z) cdf += a_;
      return cdf;
    }
    case Kind::constant:
      return z >= std::log(a_) ? 1.0 : 0.0;
  }
  return 0.0;
}

void ChangePointModel::check_distinguishable() const {
  Rng rng(kSelfCheckSeed);
  MeanAccumulator acc;
  for (int i = 0; i < kSelfCheckDraws; ++i) acc.add(sample_log_lr(Regime::post, rng));
  if (acc.mean() - 3.0 * acc.std_error() <= 0.0)
    throw ModelConfigError(
        "model self-check failed: post-change mean log LR is not strictly positive");
}

GeometricPrior::GeometricPrior(double pi_mass, double rate) : pi(pi_mass), p(rate) {
  if (!(pi >= 0.0) || !(pi < 1.0))
    throw ModelConfigError("geometric prior: pi must lie in [0,1)");
  if (!(p > 0.0) || !(p < 1.0))
    throw ModelConfigError("geometric prior: p must lie in (0,1)");
}

double GeometricPrior::mass(std::uint64_t n) const {
  if (n == 0) return pi + (1.0 - pi) * p;
  return (1.0 - pi) * p * std::pow(1.0 - p, static_cast<double>(n));
}

std::uint64_t GeometricPrior::sample(Rng& rng) const {
  if (pi > 0.0 && rng.uniform() < pi) return 0;
  return rng.geometric(p);
}

std::vector<StreamSample> simulate_stream(const ChangePointModel& model, const StreamSpec& spec) {
  if (spec.n_max < 1) throw ModelConfigError("stream spec: n_max must be at least 1");
  Rng rng = Rng::stream(spec.rng_seed, 0, 0);
  std::vector<StreamSample> out;
  out.reserve(spec.n_max);
  for (std::uint64_t n = 1; n <= spec.n_max; ++n) {
    const Regime regime = spec.nu.post_change(n) ? Regime::post : Regime::pre;
    const double x = model.sample(regime, rng);
    out.push_back({x, model.log_lr(x)});
  }
  return out;
}

}  // namespace qcd
