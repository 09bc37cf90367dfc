#include "sparse_eigenmaps/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <vector>

namespace sre {

SymmetricMatrix SymmetricMatrix::from_dense(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > tol)
        throw std::invalid_argument("matrix is not symmetric");
    SymmetricMatrix s(static_cast<int>(m.rows()));
    // Store the exactly-symmetrized average so symmetry holds bit-exactly.
    s.m_ = 0.5 * (m + m.transpose());
    return s;
}

bool all_finite(const Matrix& m) { return m.allFinite(); }

namespace {

void fix_signs(Matrix& vecs) {
    for (Eigen::Index j = 0; j < vecs.cols(); ++j) {
        Eigen::Index arg = 0;
        double best = -1.0;
        for (Eigen::Index i = 0; i < vecs.rows(); ++i) {
            double a = std::abs(vecs(i, j));
            if (a > best) {
                best = a;
                arg = i;
            }
        }
        if (vecs(arg, j) < 0.0) vecs.col(j) = -vecs.col(j);
    }
}

bool lex_less(const Matrix& vecs, Eigen::Index a, Eigen::Index b) {
    for (Eigen::Index i = 0; i < vecs.rows(); ++i) {
        if (vecs(i, a) != vecs(i, b)) return vecs(i, a) < vecs(i, b);
    }
    return false;
}

}  // namespace

Spectrum eigh(const SymmetricMatrix& a) {
    if (!all_finite(a.mat())) throw std::invalid_argument("eigh: non-finite entries");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(a.mat());
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigh: solver failed");

    const int n = a.n();
    Matrix vecs = solver.eigenvectors();
    Vector vals = solver.eigenvalues();
    fix_signs(vecs);

    std::vector<Eigen::Index> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
        if (vals(x) != vals(y)) return vals(x) > vals(y);
        return lex_less(vecs, x, y);
    });

    Spectrum s;
    s.eigenvalues.resize(n);
    s.eigenvectors.resize(n, n);
    for (int j = 0; j < n; ++j) {
        s.eigenvalues(j) = vals(order[j]);
        s.eigenvectors.col(j) = vecs.col(order[j]);
    }
    return s;
}

SvdResult svd(const Matrix& m) {
    if (!all_finite(m)) throw std::invalid_argument("svd: non-finite entries");
    Eigen::JacobiSVD<Matrix> solver(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return {solver.matrixU(), solver.singularValues(), solver.matrixV()};
}

double frobenius_distance(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("frobenius_distance: shape mismatch");
    return (a - b).norm();
}

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void save_matrix_csv(const Matrix& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            out << format_double(m(i, j));
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

Matrix load_matrix_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw std::runtime_error("bad CSV cell '" + cell + "' in " + path);
            }
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::runtime_error("ragged CSV rows in " + path);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error("empty CSV: " + path);
    Matrix m(rows.size(), rows.front().size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

}  // namespace sre
