#pragma once

#include <cstdint>
#include <vector>

namespace qorw {

// Counter-based stream splitting: each (seed, index, slot) triple yields one
// uniform deviate, so sample i is the same regardless of worker layout.
std::uint64_t splitmix64(std::uint64_t x);

// Uniform double in [0, 1).
double uniform01(std::uint64_t seed, std::uint64_t index, std::uint64_t slot);

// Uniform integer in {0, ..., n−1}.
int uniform_int(std::uint64_t seed, std::uint64_t index, std::uint64_t slot, int n);

// Inverse-transform sampler over [0, 2π) from a piecewise-linear CDF of a
// nonnegative density sampled on a uniform grid.
class CircleSampler {
  public:
    // density(i) evaluated at φ_i = 2πi/nodes; need not be normalized.
    CircleSampler(const std::vector<double>& density);

    double sample(double u) const;  // u ∈ [0,1) → φ

  private:
    std::vector<double> cdf_;  // cdf_[i] = P(φ ≤ 2πi/n), size nodes+1
};

}  // namespace qorw
