#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sparse_eigenmaps/dataset.hpp"
#include "sparse_eigenmaps/matrix.hpp"

namespace sre {

enum class NoiseKind { none, beta, beta_biased, distance_gaussian };

std::string to_string(NoiseKind k);
NoiseKind noise_kind_from_string(const std::string& s);

/// Observation model parameters: the noise distribution applied to the clean
/// kernel, plus independent Bernoulli(p) occlusion of upper-triangle entries.
struct NoiseSpec {
    NoiseKind kind = NoiseKind::none;
    double alpha = 1.0;   // beta fidelity; >= 1e12 is the exact limit, <= 1e-12 the Bernoulli limit
    double bias = 0.0;    // beta_biased only
    double nu2 = 0.0;     // distance_gaussian variance
    double sigma = 0.2;   // distance_gaussian kernel bandwidth
    double p = 1.0;       // observation probability
    std::uint64_t seed = 0;

    void validate() const;
};

/// Sparse, noisy realization of a kernel matrix plus its provenance.
struct ObservedMatrix {
    SymmetricMatrix y;
    NoiseSpec spec;
    std::vector<bool> mask;  // upper triangle (i<j), row-major

    explicit ObservedMatrix(int n) : y(n), mask(static_cast<size_t>(n) * (n - 1) / 2, false) {}

    bool observed(int i, int j) const;
    double observed_fraction() const;
};

/// Entrywise Beta noise with mean preserved: K'_ij ~ Beta(a, a(1-K_ij)/K_ij).
/// Entries exactly 0 or 1 stay deterministic.
KernelMatrix beta_noise(const KernelMatrix& k, double alpha, std::uint64_t seed);

/// Beta noise with target mean clip(K_ij + b, 0, 1); clipped means become
/// deterministic endpoints. b = 0 reproduces beta_noise bit-exactly.
KernelMatrix beta_noise_biased(const KernelMatrix& k, double alpha, double b, std::uint64_t seed);

/// Gaussian perturbation of the distances before kernelization:
/// K_ij = exp(-(d_ij + Z_ij)^2 / sigma^2), Z ~ N(0, nu2) i.i.d.
KernelMatrix distance_noise_kernel(const DistanceMatrix& d, double sigma, double nu2,
                                   std::uint64_t seed);

/// Keeps each upper-triangle entry with probability p, zeroing the rest.
ObservedMatrix occlude(const SymmetricMatrix& k, double p, std::uint64_t seed);

/// The noise stage of `corrupt` alone: applies spec.kind with the noise
/// substream of spec.seed, no occlusion.
KernelMatrix apply_noise(const KernelMatrix& k, const NoiseSpec& spec,
                         const DistanceMatrix* distances = nullptr);

/// The occlusion stage of `corrupt` alone: Bernoulli(spec.p) mask drawn from
/// the mask substream of spec.seed.
ObservedMatrix apply_occlusion(const KernelMatrix& noisy, const NoiseSpec& spec);

/// Applies spec.kind noise then occlusion with spec.p. Noise and mask use
/// independent substreams of spec.seed (kNoiseStreamTag / kMaskStreamTag),
/// so varying p leaves the noise realization untouched. distance_gaussian
/// requires the distance matrix.
ObservedMatrix corrupt(const KernelMatrix& k, const NoiseSpec& spec,
                       const DistanceMatrix* distances = nullptr);

}  // namespace sre
