#pragma once

#include <string>
#include <vector>

#include "sparse_eigenmaps/dataset.hpp"
#include "sparse_eigenmaps/embedding.hpp"
#include "sparse_eigenmaps/laplacian.hpp"
#include "sparse_eigenmaps/noise.hpp"

namespace sre {

/// Max over i of |D_ii(Yhat) - D_ii(Khat)| / D_ii(Khat). Inputs must share
/// the same order and regularization. Zero-degree reference rows with zero
/// deviation contribute 0.
double degree_concentration(const RegularizedMatrix& yhat, const RegularizedMatrix& khat);

struct Theorem3Result {
    double frob_dev;    // ||L^2(Yhat) - L^2(Khat)||_F
    double rate_bound;  // sqrt(log n) / (r * sqrt(n))
    double ratio;       // frob_dev / rate_bound, the empirical constant
};

/// Requires r > 0 (the rate is undefined at r = 0).
Theorem3Result theorem3_deviation(const RegularizedMatrix& yhat, const RegularizedMatrix& khat);

struct DavisKahanResult {
    double dk_lhs = 0.0;  // ||X - Xref * O||_F^2 / 2
    double dk_rhs = 0.0;  // ||Lsq_y - Lsq_ref||_F^2 / delta^2
    double delta = 0.0;
    int k_y = 0, k_ref = 0;
    bool dims_match = false;
    bool holds = true;  // vacuously true when dims differ
};

/// Checks the Davis-Kahan inequality between eigenspaces of two squared
/// Laplacians selected by the open interval (lo,hi); delta is measured on
/// the reference spectrum.
DavisKahanResult davis_kahan_check(const SymmetricMatrix& lsq_y, const SymmetricMatrix& lsq_ref,
                                   double lo, double hi);

struct Theorem1Trial {
    int trial = 0;
    double err = 0.0;   // ||X - Xref * O||_F
    double rate = 0.0;  // sqrt(log n) / (delta * r * sqrt(n))
    bool excluded = false;            // dims mismatched or delta = 0
    bool hypothesis_violated = false; // r < log(n)/n
};

struct Theorem1Result {
    std::vector<Theorem1Trial> trials;
    int excluded_count = 0;
    double delta = 0.0;
    int k_ref = 0;
    double median_err = 0.0;
    double q95_err = 0.0;
    double c_hat = 0.0;  // median err / rate
};

/// Monte-Carlo for the end-to-end eigenspace bound: per trial, corrupt the
/// kernel, regularize both sides, select eigenspaces of the (unsquared)
/// Laplacians by (lo,hi), align, and record the aligned error against the
/// theoretical rate. The reference side is L(p*K + rJ). Trial t draws its
/// seed as mix_seed(spec.seed, kTrialTag, t).
Theorem1Result theorem1_experiment(const KernelMatrix& kernel, const NoiseSpec& spec, double r,
                                   double lo, double hi, int trials,
                                   const DistanceMatrix* distances = nullptr);

inline constexpr std::uint64_t kTrialTag = 0x747269616cULL;  // "trial"

/// One row of the per-trial diagnostics CSV.
struct DiagnosticsRow {
    int trial = 0;
    double beta_hat = 0.0;
    double frob_dev = 0.0;
    double rate_bound = 0.0;
    double ratio = 0.0;
    double dk_lhs = 0.0;
    double dk_rhs = 0.0;
    bool dims_match = false;
    bool holds = true;
};

struct DiagnosticsRun {
    int n = 0;
    double r = 0.0, p = 1.0;
    std::vector<DiagnosticsRow> rows;
    DiagnosticsRow mean;  // trial = -1; booleans are AND over rows
};

/// Runs `trials` corrupt/regularize cycles against the clean reference,
/// recording degree concentration, the squared-Laplacian deviation, and the
/// Davis-Kahan check on the squared Laplacians. The selection interval is
/// the default interval capturing the top `interval_count` eigenvalues of
/// the clean squared Laplacian. Requires r > 0.
DiagnosticsRun run_diagnostics(const KernelMatrix& kernel, const NoiseSpec& spec, double r,
                               int interval_count, int trials,
                               const DistanceMatrix* distances = nullptr);

/// Columns: n,r,p,trial,beta_hat,frob_dev,rate_bound,ratio,dk_lhs,dk_rhs,
/// dims_match,holds. The final row (trial = -1) holds per-column means.
void write_diagnostics_csv(const DiagnosticsRun& run, const std::string& path);

}  // namespace sre
