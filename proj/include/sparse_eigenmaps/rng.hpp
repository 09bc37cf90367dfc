#pragma once

#include <cstdint>
#include <random>

namespace sre {

/// splitmix64 finalizer; used everywhere a seed is mixed or derived.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
    return splitmix64(splitmix64(seed) ^ tag);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return splitmix64(mix_seed(seed, a) ^ splitmix64(b));
}

// Fixed substream tags. Noise and occlusion-mask draws come from distinct
// streams so that changing p never perturbs the noise realization.
inline constexpr std::uint64_t kNoiseStreamTag = 0x6e6f697365ULL;  // "noise"
inline constexpr std::uint64_t kMaskStreamTag = 0x6d61736bULL;     // "mask"

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(splitmix64(seed)); }

/// Exact Beta(a, b) sampling via the two-gamma ratio.
inline double sample_beta(Rng& rng, double a, double b) {
    std::gamma_distribution<double> ga(a, 1.0);
    std::gamma_distribution<double> gb(b, 1.0);
    double x = ga(rng);
    double y = gb(rng);
    double s = x + y;
    if (s <= 0.0) return a / (a + b);  // both underflowed; return the mean
    return x / s;
}

}  // namespace sre
