#pragma once

#include <cmath>
#include <cstdint>

namespace fnolab {

// Deterministic, stdlib-independent RNG. All randomness in the project flows
// through this so that results are reproducible across compilers and across
// any degree of parallelism (streams are derived per work item, never shared).
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1), 53-bit mantissa.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    /// Standard normal via Box-Muller; never returns NaN (u1 bounded away from 0).
    double next_normal() {
        double u1 = next_unit();
        double u2 = next_unit();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

  private:
    std::uint64_t state_;
};

/// Counter-based stream derivation: the i-th derived seed of `master`.
/// Used for pool draws, restarts, shuffles; decorrelates nearby masters.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    SplitMix64 mix(master ^ (0x632be59bd9b4e019ull + index * 0x9e3779b97f4a7c15ull));
    return mix.next_u64();
}

} // namespace fnolab
