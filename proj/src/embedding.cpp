#include "sparse_eigenmaps/embedding.hpp"

#include <limits>

namespace sre {

Embedding eigenmaps_embed(const SymmetricMatrix& l, int d) {
    return eigenmaps_embed(eigh(l), d);
}

Embedding eigenmaps_embed(const Spectrum& spectrum, int d) {
    const int n = static_cast<int>(spectrum.eigenvalues.size());
    if (d < 1 || d > n - 1) throw std::invalid_argument("eigenmaps_embed: d out of range");
    return {spectrum.eigenvectors.middleCols(1, d)};
}

EigenSelection select_eigenspace(const SymmetricMatrix& l, double lo, double hi) {
    return select_eigenspace(eigh(l), lo, hi);
}

EigenSelection select_eigenspace(const Spectrum& spectrum, double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("select_eigenspace: need lo < hi");
    const int n = static_cast<int>(spectrum.eigenvalues.size());
    std::vector<int> inside;
    for (int j = 0; j < n; ++j) {
        double e = spectrum.eigenvalues(j);
        if (e > lo && e < hi) inside.push_back(j);
    }
    EigenSelection sel;
    sel.lo = lo;
    sel.hi = hi;
    sel.k = static_cast<int>(inside.size());
    sel.basis.resize(n, sel.k);
    sel.eigenvalues_inside.resize(sel.k);
    for (int c = 0; c < sel.k; ++c) {
        sel.basis.col(c) = spectrum.eigenvectors.col(inside[c]);
        sel.eigenvalues_inside(c) = spectrum.eigenvalues(inside[c]);
    }
    sel.gap = eigengap(spectrum.eigenvalues, lo, hi);
    return sel;
}

double eigengap(const Vector& eigenvalues, double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("eigengap: need lo < hi");
    double gap = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < eigenvalues.size(); ++j) {
        double e = eigenvalues(j);
        if (e > lo && e < hi) continue;  // inside the open interval
        gap = std::min(gap, std::max({lo - e, e - hi, 0.0}));
    }
    return gap;
}

std::pair<double, double> default_interval(const Vector& eigenvalues_desc, int count) {
    const int n = static_cast<int>(eigenvalues_desc.size());
    if (count < 1 || count > n) throw std::invalid_argument("default_interval: bad count");
    double hi = eigenvalues_desc(0) + 1.0;
    double lo = count == n ? eigenvalues_desc(n - 1) - 1.0
                           : 0.5 * (eigenvalues_desc(count - 1) + eigenvalues_desc(count));
    return {lo, hi};
}

}  // namespace sre
