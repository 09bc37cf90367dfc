#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sre {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Dense real symmetric matrix. Symmetry holds exactly: the setter writes
/// both triangles, and from_dense rejects inputs that are not symmetric.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(int n) : m_(Matrix::Zero(check_order(n), n)) {}

    /// Wraps a dense matrix, rejecting asymmetry beyond tol.
    static SymmetricMatrix from_dense(const Matrix& m, double tol = 1e-9);

    int n() const { return static_cast<int>(m_.rows()); }
    double operator()(int i, int j) const { return m_(i, j); }

    void set(int i, int j, double v) {
        m_(i, j) = v;
        m_(j, i) = v;
    }

    const Matrix& mat() const { return m_; }
    Vector row_sums() const { return m_.rowwise().sum(); }

private:
    static int check_order(int n) {
        if (n < 1) throw std::invalid_argument("matrix order must be >= 1");
        return n;
    }
    Matrix m_;
};

/// Eigendecomposition of a symmetric matrix: eigenvalues nonincreasing,
/// column j of eigenvectors paired with eigenvalues[j].
struct Spectrum {
    Vector eigenvalues;
    Matrix eigenvectors;
};

/// Symmetric eigendecomposition with a deterministic sign convention:
/// each eigenvector's entry of largest absolute value is nonnegative
/// (ties on |value| broken by lowest index). Equal eigenvalues are ordered
/// by the sign-fixed lexicographic order of their eigenvectors.
/// Throws on non-finite input.
Spectrum eigh(const SymmetricMatrix& a);

struct SvdResult {
    Matrix u;
    Vector singular_values;  // nonnegative, nonincreasing
    Matrix v;
};

/// Full SVD, M = U * diag(s) * V^T. Throws on non-finite input.
SvdResult svd(const Matrix& m);

/// sqrt(sum of squared entrywise differences). Throws on shape mismatch.
double frobenius_distance(const Matrix& a, const Matrix& b);

bool all_finite(const Matrix& m);

// --- Matrix CSV format (project-wide): dense, comma-separated, one row per
// line, no header. Doubles printed shortest-round-trip.

std::string format_double(double v);
void save_matrix_csv(const Matrix& m, const std::string& path);
Matrix load_matrix_csv(const std::string& path);

}  // namespace sre
