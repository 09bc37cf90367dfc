#pragma once

#include "sparse_eigenmaps/matrix.hpp"

namespace sre {

/// Eigenmap coordinates: columns are orthonormal eigenvectors of L.
struct Embedding {
    Matrix coordinates;  // n x d
    int n() const { return static_cast<int>(coordinates.rows()); }
    int d() const { return static_cast<int>(coordinates.cols()); }
};

/// Eigenpairs of one operator falling strictly inside an open interval,
/// together with the spectral gap to the rest of the spectrum.
struct EigenSelection {
    double lo = 0.0, hi = 0.0;
    int k = 0;                 // count of eigenvalues inside (lo,hi)
    Matrix basis;              // n x k, orthonormal columns
    Vector eigenvalues_inside;
    double gap = 0.0;          // +inf when no eigenvalue lies outside
};

/// Drops the top eigenvector (by eigenvalue rank) and returns the next d
/// eigenvectors of L as columns.
Embedding eigenmaps_embed(const SymmetricMatrix& l, int d);
Embedding eigenmaps_embed(const Spectrum& spectrum, int d);

EigenSelection select_eigenspace(const SymmetricMatrix& l, double lo, double hi);
EigenSelection select_eigenspace(const Spectrum& spectrum, double lo, double hi);

/// Distance from the eigenvalues outside the open interval (lo,hi) to the
/// interval: min over outside eigenvalues of max(lo - e, e - hi, 0).
/// Returns +inf when every eigenvalue lies inside.
double eigengap(const Vector& eigenvalues, double lo, double hi);

/// Harness convention for picking the selection interval: open interval
/// containing the top `count` eigenvalues, with the lower endpoint at the
/// midpoint between eigenvalue `count` and `count+1` (1-indexed).
std::pair<double, double> default_interval(const Vector& eigenvalues_desc, int count);

}  // namespace sre
