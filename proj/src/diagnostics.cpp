#include "sparse_eigenmaps/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "sparse_eigenmaps/alignment.hpp"
#include "sparse_eigenmaps/rng.hpp"

namespace sre {

double degree_concentration(const RegularizedMatrix& yhat, const RegularizedMatrix& khat) {
    if (yhat.base.n() != khat.base.n())
        throw std::invalid_argument("degree_concentration: order mismatch");
    if (yhat.r != khat.r)
        throw std::invalid_argument("degree_concentration: regularization mismatch");
    double worst = 0.0;
    for (int i = 0; i < khat.base.n(); ++i) {
        double ref = khat.degrees(i);
        double dev = std::abs(yhat.degrees(i) - ref);
        if (ref == 0.0) {
            if (dev > 0.0) throw std::domain_error("degree_concentration: zero reference degree");
            continue;
        }
        worst = std::max(worst, dev / ref);
    }
    return worst;
}

Theorem3Result theorem3_deviation(const RegularizedMatrix& yhat, const RegularizedMatrix& khat) {
    if (yhat.r != khat.r)
        throw std::invalid_argument("theorem3_deviation: regularization mismatch");
    if (yhat.r <= 0.0) throw std::invalid_argument("theorem3_deviation: r must be > 0");
    const int n = yhat.base.n();
    SymmetricMatrix lsq_y = squared(normalized_laplacian(yhat));
    SymmetricMatrix lsq_k = squared(normalized_laplacian(khat));
    double frob_dev = frobenius_distance(lsq_y.mat(), lsq_k.mat());
    double rate = std::sqrt(std::log(static_cast<double>(n))) / (yhat.r * std::sqrt(n));
    return {frob_dev, rate, frob_dev / rate};
}

DavisKahanResult davis_kahan_check(const SymmetricMatrix& lsq_y, const SymmetricMatrix& lsq_ref,
                                   double lo, double hi) {
    if (lsq_y.n() != lsq_ref.n())
        throw std::invalid_argument("davis_kahan_check: order mismatch");
    EigenSelection sel_y = select_eigenspace(lsq_y, lo, hi);
    EigenSelection sel_ref = select_eigenspace(lsq_ref, lo, hi);

    DavisKahanResult res;
    res.k_y = sel_y.k;
    res.k_ref = sel_ref.k;
    res.delta = sel_ref.gap;
    res.dims_match = sel_y.k == sel_ref.k;
    double dev = frobenius_distance(lsq_y.mat(), lsq_ref.mat());
    res.dk_rhs = std::isinf(res.delta) ? 0.0 : dev * dev / (res.delta * res.delta);
    if (!res.dims_match) {
        res.holds = true;  // theorem hypothesis fails; vacuous
        return res;
    }
    if (sel_y.k == 0) {
        res.dk_lhs = 0.0;
    } else {
        AlignmentReport rep = procrustes(sel_y.basis, sel_ref.basis);
        res.dk_lhs = 0.5 * rep.residual * rep.residual;
    }
    if (std::isinf(res.delta)) {
        // Empty complement: the bound is unconstrained.
        res.holds = true;
    } else {
        res.holds = res.dk_lhs <= res.dk_rhs * (1.0 + 1e-9);
    }
    return res;
}

namespace {

double quantile_sorted(const std::vector<double>& sorted, double q) {
    if (sorted.empty()) return 0.0;
    double pos = q * (sorted.size() - 1);
    size_t lo = static_cast<size_t>(pos);
    size_t hi = std::min(lo + 1, sorted.size() - 1);
    double frac = pos - lo;
    return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

}  // namespace

Theorem1Result theorem1_experiment(const KernelMatrix& kernel, const NoiseSpec& spec, double r,
                                   double lo, double hi, int trials,
                                   const DistanceMatrix* distances) {
    if (r < 0.0) throw std::invalid_argument("theorem1_experiment: r must be >= 0");
    if (trials < 1) throw std::invalid_argument("theorem1_experiment: trials must be >= 1");
    const int n = kernel.n();
    const bool hypothesis_violated = r < std::log(static_cast<double>(n)) / n;

    // Reference side: L(p*K + rJ), per the occlusion model's expectation.
    SymmetricMatrix scaled = SymmetricMatrix::from_dense(spec.p * kernel.base().mat(), 0.0);
    RegularizedMatrix khat = regularize(scaled, r);
    SymmetricMatrix l_ref = normalized_laplacian(khat);
    Spectrum ref_spec = eigh(l_ref);
    EigenSelection sel_ref = select_eigenspace(ref_spec, lo, hi);

    Theorem1Result result;
    result.delta = sel_ref.gap;
    result.k_ref = sel_ref.k;
    double rate = std::isinf(sel_ref.gap) || sel_ref.gap == 0.0
                      ? 0.0
                      : std::sqrt(std::log(static_cast<double>(n))) /
                            (sel_ref.gap * r * std::sqrt(n));

    std::vector<double> errs;
    for (int t = 0; t < trials; ++t) {
        NoiseSpec trial_spec = spec;
        trial_spec.seed = mix_seed(spec.seed, kTrialTag, static_cast<std::uint64_t>(t));
        ObservedMatrix obs = corrupt(kernel, trial_spec, distances);
        RegularizedMatrix yhat = regularize(obs.y, r);
        EigenSelection sel_y = select_eigenspace(normalized_laplacian(yhat), lo, hi);

        Theorem1Trial trial;
        trial.trial = t;
        trial.rate = rate;
        trial.hypothesis_violated = hypothesis_violated;
        if (sel_y.k != sel_ref.k || sel_ref.gap == 0.0) {
            trial.excluded = true;
            ++result.excluded_count;
        } else if (sel_ref.k == 0) {
            trial.err = 0.0;
            errs.push_back(0.0);
        } else {
            trial.err = procrustes(sel_y.basis, sel_ref.basis).residual;
            errs.push_back(trial.err);
        }
        result.trials.push_back(trial);
    }

    std::sort(errs.begin(), errs.end());
    result.median_err = quantile_sorted(errs, 0.5);
    result.q95_err = quantile_sorted(errs, 0.95);
    result.c_hat = rate > 0.0 ? result.median_err / rate : 0.0;
    return result;
}

DiagnosticsRun run_diagnostics(const KernelMatrix& kernel, const NoiseSpec& spec, double r,
                               int interval_count, int trials,
                               const DistanceMatrix* distances) {
    if (r <= 0.0) throw std::invalid_argument("run_diagnostics: r must be > 0");
    if (trials < 1) throw std::invalid_argument("run_diagnostics: trials must be >= 1");
    const int n = kernel.n();

    SymmetricMatrix scaled = SymmetricMatrix::from_dense(spec.p * kernel.base().mat(), 0.0);
    RegularizedMatrix khat = regularize(scaled, r);
    SymmetricMatrix lsq_ref = squared(normalized_laplacian(khat));
    Spectrum ref_sq_spec = eigh(lsq_ref);
    auto [lo, hi] = default_interval(ref_sq_spec.eigenvalues, interval_count);

    DiagnosticsRun run;
    run.n = n;
    run.r = r;
    run.p = spec.p;
    run.mean.trial = -1;
    run.mean.dims_match = true;
    run.mean.holds = true;

    for (int t = 0; t < trials; ++t) {
        NoiseSpec trial_spec = spec;
        trial_spec.seed = mix_seed(spec.seed, kTrialTag, static_cast<std::uint64_t>(t));
        ObservedMatrix obs = corrupt(kernel, trial_spec, distances);
        RegularizedMatrix yhat = regularize(obs.y, r);
        SymmetricMatrix lsq_y = squared(normalized_laplacian(yhat));

        DiagnosticsRow row;
        row.trial = t;
        row.beta_hat = degree_concentration(yhat, khat);
        Theorem3Result t3 = theorem3_deviation(yhat, khat);
        row.frob_dev = t3.frob_dev;
        row.rate_bound = t3.rate_bound;
        row.ratio = t3.ratio;
        DavisKahanResult dk = davis_kahan_check(lsq_y, lsq_ref, lo, hi);
        row.dk_lhs = dk.dk_lhs;
        row.dk_rhs = dk.dk_rhs;
        row.dims_match = dk.dims_match;
        row.holds = dk.holds;

        run.mean.beta_hat += row.beta_hat;
        run.mean.frob_dev += row.frob_dev;
        run.mean.rate_bound += row.rate_bound;
        run.mean.ratio += row.ratio;
        run.mean.dk_lhs += row.dk_lhs;
        run.mean.dk_rhs += row.dk_rhs;
        run.mean.dims_match = run.mean.dims_match && row.dims_match;
        run.mean.holds = run.mean.holds && row.holds;
        run.rows.push_back(row);
    }
    double inv = 1.0 / trials;
    run.mean.beta_hat *= inv;
    run.mean.frob_dev *= inv;
    run.mean.rate_bound *= inv;
    run.mean.ratio *= inv;
    run.mean.dk_lhs *= inv;
    run.mean.dk_rhs *= inv;
    return run;
}

void write_diagnostics_csv(const DiagnosticsRun& run, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "n,r,p,trial,beta_hat,frob_dev,rate_bound,ratio,dk_lhs,dk_rhs,dims_match,holds\n";
    auto emit = [&](const DiagnosticsRow& row) {
        out << run.n << ',' << format_double(run.r) << ',' << format_double(run.p) << ','
            << row.trial << ',' << format_double(row.beta_hat) << ','
            << format_double(row.frob_dev) << ',' << format_double(row.rate_bound) << ','
            << format_double(row.ratio) << ',' << format_double(row.dk_lhs) << ','
            << format_double(row.dk_rhs) << ',' << (row.dims_match ? 1 : 0) << ','
            << (row.holds ? 1 : 0) << '\n';
    };
    for (const auto& row : run.rows) emit(row);
    emit(run.mean);
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace sre
