#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace qcd {

namespace detail {

inline constexpr std::uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ULL;

// SplitMix64 finalizer; used to expand seeds and derive sub-streams.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t splitmix_next(std::uint64_t& state) {
  state += kSplitMixGamma;
  return mix64(state);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace detail

// xoshiro256++ generator with SplitMix64 seeding.
//
// Sub-streams are derived from (seed, stream, lane); every Monte Carlo
// replication owns its own stream so replication results do not depend on
// worker count or scheduling order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& word : state_) word = detail::splitmix_next(s);
  }

  // Independent sub-stream for replication `stream`; `lane` separates the
  // different random inputs one replication consumes (observations, detector
  // initialization, spliced suffixes, ...).
  static Rng stream(std::uint64_t seed, std::uint64_t stream, std::uint64_t lane = 0) {
    std::uint64_t x = detail::mix64(seed ^ (detail::kSplitMixGamma * (stream + 1)));
    x = detail::mix64(x ^ (0xD1B54A32D192ED03ULL * (lane + 1)));
    return Rng(x);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = detail::rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = detail::rotl(state_[3], 45);
    return result;
  }

  // Uniform on [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1]; safe as a log() argument.
  double uniform_positive() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller.
  double gaussian() {
    const double u1 = uniform_positive();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  // Exponential with the given rate.
  double exponential(double rate) { return -std::log(u_for_exp()) / rate; }

  bool bernoulli(double p) { return uniform() < p; }

  // Geometric on {0, 1, 2, ...} with success probability p.
  std::uint64_t geometric(double p) {
    const double u = uniform_positive();
    const double g = std::floor(std::log(u) / std::log1p(-p));
    return g < 0.0 ? 0 : static_cast<std::uint64_t>(g);
  }

 private:
  double u_for_exp() { return uniform_positive(); }

  std::array<std::uint64_t, 4> state_{};
};

}  // namespace qcd
