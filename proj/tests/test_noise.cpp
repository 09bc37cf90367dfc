#include <doctest.h>

#include <cmath>

#include "sparse_eigenmaps/dataset.hpp"
#include "sparse_eigenmaps/noise.hpp"

using namespace sre;

namespace {

KernelMatrix constant_kernel(int n, double v) {
    SymmetricMatrix base(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) base.set(i, j, v);
    return KernelMatrix(std::move(base));
}

KernelMatrix test_kernel() {
    PointCloud p = sample_swiss_roll(40, 2, 2.0, 3);
    return gaussian_kernel(pairwise_distances(p), 1.0);
}

}  // namespace

TEST_CASE("noise kind string round-trip") {
    for (NoiseKind k : {NoiseKind::none, NoiseKind::beta, NoiseKind::beta_biased,
                        NoiseKind::distance_gaussian})
        CHECK(noise_kind_from_string(to_string(k)) == k);
    CHECK_THROWS_AS(noise_kind_from_string("bogus"), std::invalid_argument);
}

TEST_CASE("NoiseSpec validation") {
    NoiseSpec s;
    s.kind = NoiseKind::beta;
    s.alpha = 1.0;
    s.p = 0.5;
    CHECK_NOTHROW(s.validate());
    s.p = 1.5;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s.p = 0.5;
    s.alpha = -1.0;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s.alpha = 1.0;
    s.kind = NoiseKind::distance_gaussian;
    s.nu2 = -0.1;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}

TEST_CASE("beta noise: alpha >= 1e12 returns the kernel exactly") {
    KernelMatrix k = test_kernel();
    KernelMatrix out = beta_noise(k, 1e12, 11);
    CHECK((out.base().mat().array() == k.base().mat().array()).all());
}

TEST_CASE("beta noise: alpha <= 1e-12 is the Bernoulli(K_ij) limit") {
    KernelMatrix k = constant_kernel(60, 0.3);
    KernelMatrix out = beta_noise(k, 1e-13, 4);
    int ones = 0, total = 0;
    for (int i = 0; i < 60; ++i)
        for (int j = i + 1; j < 60; ++j) {
            double v = out(i, j);
            CHECK((v == 0.0 || v == 1.0));
            ones += (v == 1.0);
            ++total;
        }
    // Mean 0.3 with ~1770 draws; 3 sigma of the sample mean is ~0.033.
    double mean = static_cast<double>(ones) / total;
    CHECK(mean == doctest::Approx(0.3).epsilon(0.15));
}

TEST_CASE("beta noise: endpoint entries 0 and 1 stay deterministic") {
    SymmetricMatrix base(3);
    base.set(0, 1, 1.0);
    base.set(0, 2, 0.0);
    base.set(1, 2, 0.5);
    KernelMatrix k{std::move(base)};
    KernelMatrix out = beta_noise(k, 2.0, 21);
    CHECK(out(0, 1) == 1.0);
    CHECK(out(0, 2) == 0.0);
    CHECK(out(1, 2) != 0.5);  // noise actually acted on the interior entry
}

TEST_CASE("beta noise Monte Carlo: mean K and variance K^2(1-K)/(alpha+K)") {
    const double kval = 0.4, alpha = 2.0;
    const int n = 120;  // 7140 upper-triangle draws
    KernelMatrix k = constant_kernel(n, kval);
    KernelMatrix out = beta_noise(k, alpha, 123);
    double sum = 0.0, sumsq = 0.0;
    int m = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            sum += out(i, j);
            sumsq += out(i, j) * out(i, j);
            ++m;
        }
    double mean = sum / m;
    double var = sumsq / m - mean * mean;
    double expected_var = kval * kval * (1 - kval) / (alpha + kval);
    // 3-sigma bands on the 7140-sample estimates.
    CHECK(mean == doctest::Approx(kval).epsilon(3.0 * std::sqrt(expected_var / m) / kval));
    CHECK(var == doctest::Approx(expected_var).epsilon(0.15));
}

TEST_CASE("beta_noise_biased: b = 0 is bit-identical to beta_noise") {
    KernelMatrix k = test_kernel();
    KernelMatrix a = beta_noise(k, 3.0, 77);
    KernelMatrix b = beta_noise_biased(k, 3.0, 0.0, 77);
    CHECK((a.base().mat().array() == b.base().mat().array()).all());
}

TEST_CASE("beta_noise_biased Monte Carlo mean is clip(K + b, 0, 1)") {
    const int n = 120;
    KernelMatrix k = constant_kernel(n, 0.5);
    for (double b : {-0.1, 0.1}) {
        KernelMatrix out = beta_noise_biased(k, 2.0, b, 9);
        double sum = 0.0;
        int m = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                sum += out(i, j);
                ++m;
            }
        CHECK(sum / m == doctest::Approx(0.5 + b).epsilon(0.05));
    }
    // Bias clipping to an endpoint makes the entries deterministic.
    KernelMatrix clipped = beta_noise_biased(constant_kernel(4, 0.9), 2.0, 0.5, 9);
    CHECK(clipped(0, 1) == 1.0);
}

TEST_CASE("distance noise: nu2 = 0 reproduces the gaussian kernel exactly") {
    PointCloud p = sample_swiss_roll(25, 2, 2.0, 8);
    DistanceMatrix d = pairwise_distances(p);
    KernelMatrix clean = gaussian_kernel(d, 0.2);
    KernelMatrix noisy = distance_noise_kernel(d, 0.2, 0.0, 31);
    CHECK((clean.base().mat().array() == noisy.base().mat().array()).all());
}

TEST_CASE("distance noise stays a valid kernel and perturbs entries") {
    PointCloud p = sample_swiss_roll(25, 2, 2.0, 8);
    DistanceMatrix d = pairwise_distances(p);
    KernelMatrix noisy = distance_noise_kernel(d, 0.2, 0.01, 31);
    KernelMatrix clean = gaussian_kernel(d, 0.2);
    int changed = 0;
    for (int i = 0; i < 25; ++i) {
        CHECK(noisy(i, i) == 0.0);
        for (int j = i + 1; j < 25; ++j) {
            CHECK(noisy(i, j) >= 0.0);
            CHECK(noisy(i, j) <= 1.0);
            changed += (noisy(i, j) != clean(i, j));
        }
    }
    CHECK(changed > 250);
}

TEST_CASE("occlusion: fraction near p, zeros outside mask, symmetric result") {
    KernelMatrix k = constant_kernel(80, 0.6);
    ObservedMatrix obs = occlude(k.base(), 0.3, 19);
    CHECK(obs.observed_fraction() == doctest::Approx(0.3).epsilon(0.15));
    for (int i = 0; i < 80; ++i)
        for (int j = i + 1; j < 80; ++j) {
            CHECK(obs.y(i, j) == obs.y(j, i));
            if (obs.observed(i, j))
                CHECK(obs.y(i, j) == 0.6);
            else
                CHECK(obs.y(i, j) == 0.0);
        }
    CHECK(occlude(k.base(), 1.0, 19).observed_fraction() == 1.0);
    CHECK(occlude(k.base(), 0.0, 19).observed_fraction() == 0.0);
}

TEST_CASE("occlusion masks are nested across p for a fixed seed") {
    KernelMatrix k = constant_kernel(60, 0.5);
    ObservedMatrix lo = occlude(k.base(), 0.2, 7);
    ObservedMatrix hi = occlude(k.base(), 0.7, 7);
    for (size_t e = 0; e < lo.mask.size(); ++e)
        if (lo.mask[e]) CHECK(hi.mask[e]);
}

TEST_CASE("corrupt composes noise and occlusion deterministically") {
    KernelMatrix k = test_kernel();
    NoiseSpec spec;
    spec.kind = NoiseKind::beta;
    spec.alpha = 1.0;
    spec.p = 0.5;
    spec.seed = 99;
    ObservedMatrix a = corrupt(k, spec);
    ObservedMatrix b = corrupt(k, spec);
    CHECK((a.y.mat().array() == b.y.mat().array()).all());
    CHECK(a.mask == b.mask);

    // Same seed, different p: the noise realization must be unchanged on
    // entries observed under both.
    NoiseSpec dense = spec;
    dense.p = 1.0;
    ObservedMatrix full = corrupt(k, dense);
    for (int i = 0; i < k.n(); ++i)
        for (int j = i + 1; j < k.n(); ++j)
            if (a.observed(i, j)) CHECK(a.y(i, j) == full.y(i, j));
}

TEST_CASE("corrupt with distance_gaussian requires distances") {
    KernelMatrix k = test_kernel();
    NoiseSpec spec;
    spec.kind = NoiseKind::distance_gaussian;
    spec.nu2 = 0.01;
    spec.sigma = 0.2;
    spec.seed = 1;
    CHECK_THROWS_AS(corrupt(k, spec, nullptr), std::invalid_argument);
}
