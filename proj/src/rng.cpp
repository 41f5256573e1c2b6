#include "qorw/rng.hpp"

#include <algorithm>
#include <cmath>

#include "qorw/errors.hpp"

namespace qorw {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double uniform01(std::uint64_t seed, std::uint64_t index, std::uint64_t slot) {
    std::uint64_t x = splitmix64(seed ^ splitmix64(index ^ splitmix64(slot)));
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

int uniform_int(std::uint64_t seed, std::uint64_t index, std::uint64_t slot, int n) {
    return static_cast<int>(uniform01(seed, index, slot) * n);
}

CircleSampler::CircleSampler(const std::vector<double>& density) {
    const int n = static_cast<int>(density.size());
    if (n < 2) throw usage_error("CircleSampler: need at least 2 density nodes");
    cdf_.assign(n + 1, 0.0);
    for (int i = 0; i < n; ++i) {
        const double d = std::max(density[i], 0.0);
        cdf_[i + 1] = cdf_[i] + d;
    }
    const double total = cdf_[n];
    if (total <= 0.0) throw numeric_error("CircleSampler: density integrates to zero");
    for (auto& c : cdf_) c /= total;
}

double CircleSampler::sample(double u) const {
    const int n = static_cast<int>(cdf_.size()) - 1;
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    int i = static_cast<int>(it - cdf_.begin()) - 1;
    i = std::clamp(i, 0, n - 1);
    const double lo = cdf_[i], hi = cdf_[i + 1];
    const double frac = hi > lo ? (u - lo) / (hi - lo) : 0.0;
    return 2.0 * M_PI * (i + frac) / n;
}

}  // namespace qorw
