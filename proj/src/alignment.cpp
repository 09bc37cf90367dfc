#include "sparse_eigenmaps/alignment.hpp"

namespace sre {

AlignmentReport procrustes(const Matrix& x, const Matrix& x_ref) {
    if (x.rows() != x_ref.rows() || x.cols() != x_ref.cols())
        throw std::invalid_argument("procrustes: shape mismatch");
    if (x.cols() < 1) throw std::invalid_argument("procrustes: need d >= 1");

    SvdResult s = svd(x_ref.transpose() * x);
    Matrix rotation = s.u * s.v.transpose();
    double residual = (x - x_ref * rotation).norm();
    double ref_norm = x_ref.norm();
    double rel = ref_norm > 0.0 ? residual / ref_norm : 0.0;
    return {std::move(rotation), residual, rel};
}

double subspace_distance(const Matrix& x, const Matrix& x_ref) {
    return procrustes(x, x_ref).rel_err;
}

}  // namespace sre
