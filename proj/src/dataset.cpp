#include "sparse_eigenmaps/dataset.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "sparse_eigenmaps/rng.hpp"

namespace sre {

namespace {

void check_hollow(const SymmetricMatrix& m, const char* what) {
    for (int i = 0; i < m.n(); ++i)
        if (m(i, i) != 0.0) throw std::invalid_argument(std::string(what) + ": diagonal must be zero");
}

}  // namespace

DistanceMatrix::DistanceMatrix(SymmetricMatrix base) : base_(std::move(base)) {
    check_hollow(base_, "DistanceMatrix");
    if (base_.mat().minCoeff() < 0.0)
        throw std::invalid_argument("DistanceMatrix: negative entry");
}

KernelMatrix::KernelMatrix(SymmetricMatrix base) : base_(std::move(base)) {
    check_hollow(base_, "KernelMatrix");
    if (base_.mat().minCoeff() < 0.0 || base_.mat().maxCoeff() > 1.0)
        throw std::invalid_argument("KernelMatrix: entries must lie in [0,1]");
}

PointCloud sample_swiss_roll(int n, int d_star, double c, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample_swiss_roll: n must be >= 1");
    if (d_star < 2) throw std::invalid_argument("sample_swiss_roll: d_star must be >= 2");
    if (c <= 0.0) throw std::invalid_argument("sample_swiss_roll: c must be > 0");

    Rng rng = make_rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    Matrix pts(n, d_star + 1);
    for (int i = 0; i < n; ++i) {
        double x = unif(rng);
        pts(i, 0) = c * x * std::cos(c * x);
        for (int j = 1; j < d_star; ++j) pts(i, j) = unif(rng);
        pts(i, d_star) = c * x * std::sin(c * x);
    }
    return {std::move(pts)};
}

DistanceMatrix pairwise_distances(const PointCloud& p) {
    const int n = p.n();
    SymmetricMatrix d(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            d.set(i, j, (p.points.row(i) - p.points.row(j)).norm());
    return DistanceMatrix(std::move(d));
}

KernelMatrix gaussian_kernel(const DistanceMatrix& d, double sigma) {
    if (sigma <= 0.0) throw std::invalid_argument("gaussian_kernel: sigma must be > 0");
    const int n = d.n();
    SymmetricMatrix k(n);
    const double inv = 1.0 / (sigma * sigma);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            k.set(i, j, std::exp(-d(i, j) * d(i, j) * inv));
    return KernelMatrix(std::move(k));
}

KernelMatrix planted_partition_kernel(const std::vector<int>& block_sizes,
                                      double within, double between) {
    int n = 0;
    for (int s : block_sizes) {
        if (s < 1) throw std::invalid_argument("planted_partition_kernel: empty block");
        n += s;
    }
    auto labels = planted_partition_labels(block_sizes);
    SymmetricMatrix k(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            k.set(i, j, labels[i] == labels[j] ? within : between);
    return KernelMatrix(std::move(k));
}

std::vector<int> planted_partition_labels(const std::vector<int>& block_sizes) {
    std::vector<int> labels;
    for (size_t b = 0; b < block_sizes.size(); ++b)
        labels.insert(labels.end(), block_sizes[b], static_cast<int>(b));
    return labels;
}

KernelMatrix load_kernel_csv(const std::string& path) {
    Matrix m = load_matrix_csv(path);
    if (m.rows() != m.cols()) throw std::invalid_argument("kernel CSV is not square: " + path);
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-9)
        throw std::invalid_argument("kernel CSV is not symmetric: " + path);
    if (m.minCoeff() < 0.0 || m.maxCoeff() > 1.0)
        throw std::invalid_argument("kernel CSV has entries outside [0,1]: " + path);
    for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, i) = 0.0;
    return KernelMatrix(SymmetricMatrix::from_dense(m));
}

KernelMatrix load_edge_list(const std::string& path, int n, EdgeListInfo* info) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    SymmetricMatrix k(n);
    std::vector<bool> seen(static_cast<size_t>(n) * n, false);
    EdgeListInfo local;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        long long i, j;
        if (!(ss >> i)) continue;  // blank or comment-only line
        double w = 1.0;
        if (!(ss >> j)) throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": missing endpoint");
        ss >> w;
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": index out of range");
        if (w < 0.0 || w > 1.0)
            throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": weight outside [0,1]");
        if (i == j) {
            ++local.ignored_self_loops;
            continue;
        }
        size_t key = static_cast<size_t>(std::min(i, j)) * n + std::max(i, j);
        if (seen[key]) ++local.duplicate_edges;
        seen[key] = true;
        k.set(static_cast<int>(i), static_cast<int>(j), w);
    }
    if (info) *info = local;
    return KernelMatrix(std::move(k));
}

std::vector<int> load_labels_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::vector<int> labels;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        labels.push_back(std::stoi(line));
        if (labels.back() < 0) throw std::invalid_argument("negative label in " + path);
    }
    if (labels.empty()) throw std::invalid_argument("empty labels file: " + path);
    return labels;
}

void save_labels_csv(const std::vector<int>& labels, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    for (int v : labels) out << v << '\n';
}

}  // namespace sre
