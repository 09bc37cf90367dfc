#include "sparse_eigenmaps/laplacian.hpp"

#include <cmath>

namespace sre {

RegularizedMatrix regularize(const SymmetricMatrix& a, double r) {
    if (r < 0.0) throw std::invalid_argument("regularize: r must be >= 0");
    const int n = a.n();
    Matrix base = a.mat().array() + r;
    SymmetricMatrix sym = SymmetricMatrix::from_dense(base, 0.0);
    Vector degrees = sym.row_sums();
    return {std::move(sym), r, std::move(degrees)};
}

SymmetricMatrix normalized_laplacian(const SymmetricMatrix& a) {
    const int n = a.n();
    Vector deg = a.row_sums();
    Vector scale(n);
    for (int i = 0; i < n; ++i) {
        if (deg(i) < 0.0) throw std::invalid_argument("normalized_laplacian: negative row sum");
        scale(i) = deg(i) == 0.0 ? 0.0 : 1.0 / std::sqrt(deg(i));
    }
    Matrix l = scale.asDiagonal() * a.mat() * scale.asDiagonal();
    // Symmetrize exactly; the diagonal scaling is symmetric up to rounding.
    return SymmetricMatrix::from_dense(l, 1e-12);
}

SymmetricMatrix squared(const SymmetricMatrix& l) {
    Matrix sq = l.mat() * l.mat();
    return SymmetricMatrix::from_dense(sq, 1e-9 * (1.0 + sq.cwiseAbs().maxCoeff()));
}

}  // namespace sre
