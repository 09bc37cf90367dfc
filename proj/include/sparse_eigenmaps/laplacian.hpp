#pragma once

#include "sparse_eigenmaps/matrix.hpp"

namespace sre {

/// A + r*J (diagonal included, so the diagonal of a hollow input becomes r),
/// with the degree vector D_ii = n*r + sum_j A_ij.
struct RegularizedMatrix {
    SymmetricMatrix base;
    double r;
    Vector degrees;
};

RegularizedMatrix regularize(const SymmetricMatrix& a, double r);

/// D^{-1/2} A D^{-1/2} with the pseudo-inverse convention: rows and columns
/// with zero degree are identically zero. Throws on negative row sums.
SymmetricMatrix normalized_laplacian(const SymmetricMatrix& a);

inline SymmetricMatrix normalized_laplacian(const RegularizedMatrix& m) {
    return normalized_laplacian(m.base);
}

/// L * L.
SymmetricMatrix squared(const SymmetricMatrix& l);

}  // namespace sre
