#pragma once

#include "sparse_eigenmaps/matrix.hpp"

namespace sre {

/// Result of orthogonal Procrustes alignment of X onto X_ref.
struct AlignmentReport {
    Matrix rotation;  // d x d, orthonormal (reflections allowed)
    double residual;  // ||X - X_ref * O||_F at the optimum
    double rel_err;   // residual / ||X_ref||_F
};

/// Minimizes ||X - X_ref * O||_F over the full orthogonal group via the SVD
/// of X_ref^T X. Shapes must match.
AlignmentReport procrustes(const Matrix& x, const Matrix& x_ref);

double subspace_distance(const Matrix& x, const Matrix& x_ref);

}  // namespace sre
