#pragma once

// Seeded generators for the property tests.

#include "swekit/hydraulics.hpp"

#include <cstdint>
#include <random>

namespace swekit::testing {

class StateSampler {
 public:
  explicit StateSampler(std::uint64_t seed = 20240601) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  /// Depth in (0, 10] m, velocity in [-10, 10] m/s; one sample in ten is dry.
  Cell1<double> cell1()
  {
    if (uniform(0.0, 1.0) < 0.1) return {0.0, 0.0};
    const double h = uniform(1e-6, 10.0);
    return {h, h * uniform(-10.0, 10.0)};
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace swekit::testing
