#include "sparse_eigenmaps/usvt.hpp"

#include <cmath>

namespace sre {

void UsvtConfig::validate() const {
    if (eta <= 0.0) throw std::invalid_argument("UsvtConfig: eta must be > 0");
    if (p_known > 1.0) throw std::invalid_argument("UsvtConfig: p_known must be <= 1");
    if (!(clip_lo < clip_hi)) throw std::invalid_argument("UsvtConfig: need clip_lo < clip_hi");
}

namespace {

SymmetricMatrix usvt_impl(const Matrix& y, double p_hat, const UsvtConfig& cfg) {
    if (p_hat <= 0.0) throw std::invalid_argument("usvt_complete: nothing observed (p_hat = 0)");
    const Eigen::Index n = y.rows();
    if (n < 2) throw std::invalid_argument("usvt_complete: need n >= 2");

    // BDCSVD is accurate enough here and much faster than Jacobi at n >= 100.
    Eigen::BDCSVD<Matrix> solver(y, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Vector& sv = solver.singularValues();
    const double threshold = (2.0 + cfg.eta) * std::sqrt(static_cast<double>(n) * p_hat);

    Eigen::Index kept = 0;
    while (kept < sv.size() && sv(kept) >= threshold) ++kept;
    Matrix est = Matrix::Zero(n, n);
    if (kept > 0) {
        est = solver.matrixU().leftCols(kept) * sv.head(kept).asDiagonal() *
              solver.matrixV().leftCols(kept).transpose();
    }
    est /= p_hat;
    est = est.cwiseMax(cfg.clip_lo).cwiseMin(cfg.clip_hi);
    est = 0.5 * (est + est.transpose()).eval();
    est.diagonal().setZero();
    return SymmetricMatrix::from_dense(est, 0.0);
}

}  // namespace

SymmetricMatrix usvt_complete(const ObservedMatrix& y, const UsvtConfig& cfg) {
    cfg.validate();
    double p_hat = cfg.p_known >= 0.0 ? cfg.p_known : y.observed_fraction();
    return usvt_impl(y.y.mat(), p_hat, cfg);
}

SymmetricMatrix usvt_complete(const SymmetricMatrix& y, const UsvtConfig& cfg) {
    cfg.validate();
    double p_hat = cfg.p_known;
    if (p_hat < 0.0) {
        const int n = y.n();
        long long nz = 0, tot = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++tot) nz += y(i, j) != 0.0;
        p_hat = tot > 0 ? static_cast<double>(nz) / tot : 0.0;
    }
    return usvt_impl(y.mat(), p_hat, cfg);
}

}  // namespace sre
