#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ksc {

// SplitMix64. The run contracts promise bit-identical trajectories for a
// fixed seed, so the generator is pinned here instead of relying on
// <random> engines whose distributions are implementation-defined.
struct SplitMix64 {
    std::uint64_t state = 0;

    SplitMix64() = default;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, n), n >= 1 (multiply-shift range reduction)
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }
};

// Fisher-Yates; consumes exactly idx.size()-1 draws from rng.
inline void shuffle_indices(std::span<std::uint32_t> idx, SplitMix64& rng) {
    for (std::size_t i = idx.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.below(i));
        std::uint32_t tmp = idx[i - 1];
        idx[i - 1] = idx[j];
        idx[j] = tmp;
    }
}

inline std::vector<double> sample_uniform(std::size_t n, double lo, double hi,
                                          SplitMix64& rng) {
    std::vector<double> out(n);
    for (auto& v : out) v = rng.uniform(lo, hi);
    return out;
}

} // namespace ksc
