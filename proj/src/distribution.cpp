#include "qcd/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "qcd/errors.hpp"

namespace qcd {

DiscretizedDistribution::DiscretizedDistribution(std::vector<double> edges,
                                                 std::vector<double> masses, Method method,
                                                 double threshold)
    : edges_(std::move(edges)),
      masses_(std::move(masses)),
      method_(method),
      threshold_(threshold),
      per_step_survival_(std::numeric_limits<double>::quiet_NaN()) {
  if (edges_.size() != masses_.size() + 1 || masses_.empty())
    throw ModelConfigError("discretized distribution: edges must outnumber masses by one");
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < edges_.size(); ++i) {
    if (!(edges_[i] < edges_[i + 1]))
      throw ModelConfigError("discretized distribution: edges must be strictly increasing");
  }
  for (double m : masses_) {
    if (!(m >= 0.0)) throw ModelConfigError("discretized distribution: negative mass");
    total += m;
  }
  if (!(total > 0.0)) throw ModelConfigError("discretized distribution: zero total mass");
  cumulative_.reserve(masses_.size());
  double run = 0.0;
  for (auto& m : masses_) {
    m /= total;
    run += m;
    cumulative_.push_back(run);
  }
  cumulative_.back() = 1.0;
}

double DiscretizedDistribution::mean() const {
  double mu = 0.0;
  for (std::size_t i = 0; i < masses_.size(); ++i)
    mu += masses_[i] * 0.5 * (edges_[i] + edges_[i + 1]);
  return mu;
}

double DiscretizedDistribution::cdf(double x) const {
  if (x <= edges_.front()) return 0.0;
  if (x >= edges_.back()) return 1.0;
  const auto it = std::upper_bound(edges_.begin(), edges_.end(), x);
  const std::size_t bin = static_cast<std::size_t>(it - edges_.begin()) - 1;
  const double below = bin == 0 ? 0.0 : cumulative_[bin - 1];
  const double lo = edges_[bin];
  const double hi = edges_[bin + 1];
  return below + masses_[bin] * (x - lo) / (hi - lo);
}

double DiscretizedDistribution::sample(Rng& rng) const {
  const double u = rng.uniform();
  const auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), u);
  const std::size_t bin =
      it == cumulative_.end() ? masses_.size() - 1
                              : static_cast<std::size_t>(it - cumulative_.begin());
  const double lo = edges_[bin];
  const double hi = edges_[bin + 1];
  return lo + (hi - lo) * rng.uniform();
}

void DiscretizedDistribution::save_csv(const std::string& path,
                                       const std::vector<std::string>& header_lines) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot open file for writing: " + path);
  for (const auto& line : header_lines) out << "# " << line << "\n";
  out << "bin_edge,mass\n";
  char buf[64];
  for (std::size_t i = 0; i < masses_.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", edges_[i], masses_[i]);
    out << buf;
  }
  std::snprintf(buf, sizeof(buf), "%.17g,\n", edges_.back());
  out << buf;
}

DiscretizedDistribution DiscretizedDistribution::load_csv(const std::string& path,
                                                          Method method, double threshold) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file for reading: " + path);
  std::vector<double> edges;
  std::vector<double> masses;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("bin_edge", 0) == 0) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw Error("malformed distribution row: " + line);
    edges.push_back(std::stod(line.substr(0, comma)));
    const std::string mass_field = line.substr(comma + 1);
    if (!mass_field.empty()) masses.push_back(std::stod(mass_field));
  }
  return DiscretizedDistribution(std::move(edges), std::move(masses), method, threshold);
}

DiscretizedDistribution point_mass_distribution(double x) {
  const double eps = std::max(1e-12, std::abs(x) * 1e-12);
  return DiscretizedDistribution({x, x + eps}, {1.0}, DiscretizedDistribution::Method::explicit_masses,
                                 0.0);
}

}  // namespace qcd
