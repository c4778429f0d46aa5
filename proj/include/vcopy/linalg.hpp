#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "vcopy/rational.hpp"

namespace vcopy {

using Matrix = std::vector<std::vector<Rational>>;

/// Exact rank by Gaussian elimination (the argument is consumed).
std::size_t rank(Matrix m);

/// Seeded source of the random integer points used by the generic-rank probes.
class PointSampler {
 public:
  static constexpr std::uint64_t default_seed = 20240607;
  static constexpr long default_bound = 10000;

  explicit PointSampler(std::uint64_t seed = default_seed, long bound = default_bound)
      : rng_(seed), dist_(-bound, bound) {}

  std::vector<Rational> point(std::size_t n);
  Rational value() { return Rational(dist_(rng_)); }

 private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<long> dist_;
};

}  // namespace vcopy
