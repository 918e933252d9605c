#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcd/rng.hpp"

namespace qcd {

// A distribution on [edges.front(), edges.back()) represented by bin masses.
// Within a bin the mass is treated as uniform, both for sampling and for CDF
// queries. Immutable after construction.
class DiscretizedDistribution {
 public:
  enum class Method { power_iteration, conditioned_simulation, explicit_masses };

  // edges must be strictly increasing with edges.size() == masses.size() + 1;
  // masses must be nonnegative and are normalized to sum to one.
  // `threshold` records the SR threshold A the distribution was solved for
  // (0 when not tied to a threshold, e.g. the stationary law).
  DiscretizedDistribution(std::vector<double> edges, std::vector<double> masses,
                          Method method, double threshold);

  std::size_t bins() const { return masses_.size(); }
  const std::vector<double>& edges() const { return edges_; }
  const std::vector<double>& masses() const { return masses_; }
  Method method() const { return method_; }
  double threshold() const { return threshold_; }

  // Mass-weighted sum of bin midpoints.
  double mean() const;
  double cdf(double x) const;
  // Inverse-CDF sampling with uniform jitter inside the selected bin.
  double sample(Rng& rng) const;

  // Per-step survival probability of the conditioned chain (quasi-stationary
  // solves only; NaN otherwise).
  double per_step_survival() const { return per_step_survival_; }
  void set_per_step_survival(double s) { per_step_survival_ = s; }

  // CSV persistence: rows of (bin_edge, mass); the final row carries the top
  // edge with an empty mass.
  void save_csv(const std::string& path, const std::vector<std::string>& header_lines) const;
  static DiscretizedDistribution load_csv(const std::string& path, Method method,
                                          double threshold);

 private:
  std::vector<double> edges_;
  std::vector<double> masses_;
  std::vector<double> cumulative_;
  Method method_;
  double threshold_;
  double per_step_survival_;
};

// Point mass at x, as a one-bin distribution (test and edge-case helper).
DiscretizedDistribution point_mass_distribution(double x);

}  // namespace qcd
