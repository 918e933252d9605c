#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "qcd/rng.hpp"

namespace qcd {

enum class Regime { pre, post };

// An iid change-point data model: known pre-change density f and post-change
// density g on a common support, with samplers and a pointwise log likelihood
// ratio log g(x) - log f(x).
//
// Models are immutable after construction and safe to share across workers;
// samplers take the RNG stream as an explicit argument.
class ChangePointModel {
 public:
  static ChangePointModel gaussian_mean_shift(double mu0, double mu1, double sigma = 1.0);
  static ChangePointModel exponential_rate_change(double rate0, double rate1);
  static ChangePointModel bernoulli_rate_change(double p0, double p1);
  // Degenerate model with a fixed likelihood ratio on every observation.
  // Exists for exact hand-iteration oracles; excluded from the
  // distinguishability check that real models must pass.
  static ChangePointModel constant_lr(double lr);

  const std::string& name() const { return name_; }
  // Stable identifier including parameters, for report rows and caches.
  std::string params_key() const;

  double sample(Regime regime, Rng& rng) const;
  // log g(x) - log f(x); throws ModelSupportError outside the common support.
  double log_lr(double x) const;
  // Draw one observation under `regime` and return its log likelihood ratio.
  double sample_log_lr(Regime regime, Rng& rng) const;

  // True when log LR takes values on a lattice (Bernoulli, constant);
  // renewal-theoretic constant estimation refuses such models.
  bool arithmetic_log_lr() const { return arithmetic_; }

  // Closed-form Kullback-Leibler number E_post[log LR], when available.
  std::optional<double> kl_closed_form() const { return kl_closed_; }

  // Pr_pre(log LR <= z); exact for every built-in model. Drives exact
  // transition-kernel assembly in the quasi-stationary solver.
  double pre_log_lr_cdf(double z) const;

 private:
  enum class Kind { gaussian, exponential, bernoulli, constant };

  ChangePointModel(Kind kind, std::string name, double a, double b, double c);

  void check_distinguishable() const;

  Kind kind_;
  std::string name_;
  double a_ = 0.0;  // gaussian: mu0;   exponential: rate0; bernoulli: p0; constant: lr
  double b_ = 0.0;  // gaussian: mu1;   exponential: rate1; bernoulli: p1
  double c_ = 0.0;  // gaussian: sigma
  double theta_ = 0.0;  // gaussian: standardized shift (mu1 - mu0) / sigma
  bool arithmetic_ = false;
  std::optional<double> kl_closed_;
};

// Zero-modified geometric change-point prior: Pr(nu < 0) = pi and
// Pr(nu = n) = (1 - pi) p (1 - p)^n for n >= 0. The point mass at nu < 0 is
// collapsed onto nu = 0 when sampling (both mean "already in effect").
struct GeometricPrior {
  GeometricPrior(double pi_mass, double rate);

  double pi = 0.0;
  double p = 0.0;

  // Pr(nu <= 0) for n = 0, Pr(nu = n) for n >= 1.
  double mass(std::uint64_t n) const;
  std::uint64_t sample(Rng& rng) const;

  // Initial Shiryaev statistic pi / ((1 - pi) p).
  double shiryaev_head_start() const { return pi / ((1.0 - pi) * p); }
};

// Index of the last pre-change observation; never() means no change occurs.
class ChangePoint {
 public:
  static ChangePoint at(std::uint64_t last_pre_index) { return ChangePoint(last_pre_index); }
  static ChangePoint never() {
    ChangePoint cp(0);
    cp.never_ = true;
    return cp;
  }

  bool is_never() const { return never_; }
  std::uint64_t value() const { return value_; }

  // Is observation n (1-based) drawn from the post-change density?
  bool post_change(std::uint64_t n) const { return !never_ && n > value_; }

 private:
  explicit ChangePoint(std::uint64_t v) : value_(v) {}
  std::uint64_t value_;
  bool never_ = false;
};

struct StreamSpec {
  ChangePoint nu = ChangePoint::never();
  std::uint64_t n_max = 1;
  std::uint64_t rng_seed = 0;
};

struct StreamSample {
  double observation;
  double log_lr;
};

// First min(nu, n_max) observations from f, the remainder from g;
// deterministic given the seed.
std::vector<StreamSample> simulate_stream(const ChangePointModel& model, const StreamSpec& spec);

// Lazy log-LR source for run-to-alarm loops; pre-change draws up to and
// including observation nu, post-change afterwards.
class LogLrStream {
 public:
  LogLrStream(const ChangePointModel& model, ChangePoint nu, Rng rng)
      : model_(&model),
        nu_(nu.is_never() ? std::numeric_limits<std::uint64_t>::max() : nu.value()),
        rng_(rng) {}

  double operator()() {
    ++n_;
    return model_->sample_log_lr(n_ > nu_ ? Regime::post : Regime::pre, rng_);
  }

  std::uint64_t position() const { return n_; }

 private:
  const ChangePointModel* model_;
  std::uint64_t nu_;
  std::uint64_t n_ = 0;
  Rng rng_;
};

}  // namespace qcd
