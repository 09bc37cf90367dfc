#include "sparse_eigenmaps/noise.hpp"

#include <cmath>

#include "sparse_eigenmaps/rng.hpp"

namespace sre {

std::string to_string(NoiseKind k) {
    switch (k) {
        case NoiseKind::none: return "none";
        case NoiseKind::beta: return "beta";
        case NoiseKind::beta_biased: return "beta_biased";
        case NoiseKind::distance_gaussian: return "distance_gaussian";
    }
    return "?";
}

NoiseKind noise_kind_from_string(const std::string& s) {
    if (s == "none") return NoiseKind::none;
    if (s == "beta") return NoiseKind::beta;
    if (s == "beta_biased") return NoiseKind::beta_biased;
    if (s == "distance_gaussian") return NoiseKind::distance_gaussian;
    throw std::invalid_argument("unknown noise kind: " + s);
}

void NoiseSpec::validate() const {
    if ((kind == NoiseKind::beta || kind == NoiseKind::beta_biased) && alpha <= 0.0)
        throw std::invalid_argument("NoiseSpec: alpha must be > 0");
    if (kind == NoiseKind::distance_gaussian) {
        if (sigma <= 0.0) throw std::invalid_argument("NoiseSpec: sigma must be > 0");
        if (nu2 < 0.0) throw std::invalid_argument("NoiseSpec: nu2 must be >= 0");
    }
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("NoiseSpec: p must lie in [0,1]");
}

bool ObservedMatrix::observed(int i, int j) const {
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    const int n = y.n();
    size_t idx = static_cast<size_t>(i) * n - static_cast<size_t>(i) * (i + 1) / 2 + (j - i - 1);
    return mask[idx];
}

double ObservedMatrix::observed_fraction() const {
    if (mask.empty()) return 0.0;
    size_t count = 0;
    for (bool b : mask) count += b;
    return static_cast<double>(count) / static_cast<double>(mask.size());
}

namespace {

// Degenerate-parameter limits for the Beta parameterization (alpha -> inf
// gives K' = mean a.s.; alpha -> 0 gives Bernoulli(mean)).
constexpr double kAlphaExactLimit = 1e12;
constexpr double kAlphaBernoulliLimit = 1e-12;

double sample_entry(Rng& rng, double mean, double alpha) {
    if (mean <= 0.0) return 0.0;
    if (mean >= 1.0) return 1.0;
    if (alpha >= kAlphaExactLimit) return mean;
    if (alpha <= kAlphaBernoulliLimit) {
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        return unif(rng) < mean ? 1.0 : 0.0;
    }
    return sample_beta(rng, alpha, alpha * (1.0 - mean) / mean);
}

}  // namespace

KernelMatrix beta_noise(const KernelMatrix& k, double alpha, std::uint64_t seed) {
    return beta_noise_biased(k, alpha, 0.0, seed);
}

KernelMatrix beta_noise_biased(const KernelMatrix& k, double alpha, double b, std::uint64_t seed) {
    if (alpha <= 0.0) throw std::invalid_argument("beta_noise: alpha must be > 0");
    const int n = k.n();
    Rng rng = make_rng(seed);
    SymmetricMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double mean = std::clamp(k(i, j) + b, 0.0, 1.0);
            out.set(i, j, sample_entry(rng, mean, alpha));
        }
    }
    return KernelMatrix(std::move(out));
}

KernelMatrix distance_noise_kernel(const DistanceMatrix& d, double sigma, double nu2,
                                   std::uint64_t seed) {
    if (sigma <= 0.0) throw std::invalid_argument("distance_noise_kernel: sigma must be > 0");
    if (nu2 < 0.0) throw std::invalid_argument("distance_noise_kernel: nu2 must be >= 0");
    const int n = d.n();
    Rng rng = make_rng(seed);
    std::normal_distribution<double> normal(0.0, std::sqrt(nu2));
    SymmetricMatrix out(n);
    const double inv = 1.0 / (sigma * sigma);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double dij = d(i, j) + (nu2 > 0.0 ? normal(rng) : 0.0);
            out.set(i, j, std::exp(-dij * dij * inv));
        }
    }
    return KernelMatrix(std::move(out));
}

ObservedMatrix occlude(const SymmetricMatrix& k, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("occlude: p must lie in [0,1]");
    const int n = k.n();
    Rng rng = make_rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    ObservedMatrix obs(n);
    size_t idx = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++idx) {
            bool keep = unif(rng) < p;
            obs.mask[idx] = keep;
            obs.y.set(i, j, keep ? k(i, j) : 0.0);
        }
    }
    return obs;
}

KernelMatrix apply_noise(const KernelMatrix& k, const NoiseSpec& spec,
                         const DistanceMatrix* distances) {
    spec.validate();
    const std::uint64_t noise_seed = mix_seed(spec.seed, kNoiseStreamTag);
    switch (spec.kind) {
        case NoiseKind::none:
            return k;
        case NoiseKind::beta:
            return beta_noise(k, spec.alpha, noise_seed);
        case NoiseKind::beta_biased:
            return beta_noise_biased(k, spec.alpha, spec.bias, noise_seed);
        case NoiseKind::distance_gaussian:
            if (!distances)
                throw std::invalid_argument("corrupt: distance_gaussian needs a distance matrix");
            return distance_noise_kernel(*distances, spec.sigma, spec.nu2, noise_seed);
    }
    throw std::logic_error("apply_noise: unreachable");
}

ObservedMatrix apply_occlusion(const KernelMatrix& noisy, const NoiseSpec& spec) {
    spec.validate();
    ObservedMatrix obs = occlude(noisy.base(), spec.p, mix_seed(spec.seed, kMaskStreamTag));
    obs.spec = spec;
    return obs;
}

ObservedMatrix corrupt(const KernelMatrix& k, const NoiseSpec& spec,
                       const DistanceMatrix* distances) {
    return apply_occlusion(apply_noise(k, spec, distances), spec);
}

}  // namespace sre
