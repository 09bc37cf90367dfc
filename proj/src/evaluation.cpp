#include "sparse_eigenmaps/evaluation.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <unordered_map>

#include "sparse_eigenmaps/rng.hpp"

namespace sre {

namespace {

constexpr std::uint64_t kRestartTag = 0x72737472ULL;  // "rstr"

double assign_labels(const Matrix& points, const Matrix& centers, std::vector<int>& labels) {
    double cost = 0.0;
    for (Eigen::Index i = 0; i < points.rows(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        int arg = 0;
        for (Eigen::Index c = 0; c < centers.rows(); ++c) {
            double d = (points.row(i) - centers.row(c)).squaredNorm();
            if (d < best) {
                best = d;
                arg = static_cast<int>(c);
            }
        }
        labels[i] = arg;
        cost += best;
    }
    return cost;
}

Matrix kmeanspp_init(const Matrix& points, int k, Rng& rng) {
    const Eigen::Index n = points.rows();
    Matrix centers(k, points.cols());
    std::uniform_int_distribution<Eigen::Index> pick(0, n - 1);
    centers.row(0) = points.row(pick(rng));
    Vector dist2 = (points.rowwise() - centers.row(0)).rowwise().squaredNorm();
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int c = 1; c < k; ++c) {
        double total = dist2.sum();
        Eigen::Index chosen = 0;
        if (total > 0.0) {
            double target = unif(rng) * total;
            double acc = 0.0;
            for (Eigen::Index i = 0; i < n; ++i) {
                acc += dist2(i);
                if (acc >= target) {
                    chosen = i;
                    break;
                }
            }
        } else {
            chosen = pick(rng);
        }
        centers.row(c) = points.row(chosen);
        dist2 = dist2.cwiseMin((points.rowwise() - centers.row(c)).rowwise().squaredNorm());
    }
    return centers;
}

KMeansResult lloyd(const Matrix& points, int k, std::uint64_t seed, int max_iter) {
    const Eigen::Index n = points.rows();
    Rng rng = make_rng(seed);
    Matrix centers = kmeanspp_init(points, k, rng);

    KMeansResult res;
    res.labels.assign(n, 0);
    double prev = assign_labels(points, centers, res.labels);
    for (int it = 0; it < max_iter; ++it) {
        Matrix sums = Matrix::Zero(k, points.cols());
        std::vector<int> counts(k, 0);
        for (Eigen::Index i = 0; i < n; ++i) {
            sums.row(res.labels[i]) += points.row(i);
            ++counts[res.labels[i]];
        }
        for (int c = 0; c < k; ++c)
            if (counts[c] > 0) centers.row(c) = sums.row(c) / counts[c];
        double cost = assign_labels(points, centers, res.labels);
        assert(cost <= prev + 1e-9 * (1.0 + prev));  // Lloyd never increases the objective
        if (prev - cost <= 1e-12 * (1.0 + prev)) {
            res.converged = true;
            prev = cost;
            break;
        }
        prev = cost;
    }
    res.objective = prev;
    return res;
}

}  // namespace

KMeansResult kmeans(const Matrix& points, int k, std::uint64_t seed, int max_iter, int restarts) {
    const Eigen::Index n = points.rows();
    if (k < 1 || k > n) throw std::invalid_argument("kmeans: need 1 <= k <= n");
    if (k == 1) {
        KMeansResult res;
        res.labels.assign(n, 0);
        Eigen::RowVectorXd mean = points.colwise().mean();
        res.objective = (points.rowwise() - mean).rowwise().squaredNorm().sum();
        res.converged = true;
        return res;
    }
    KMeansResult best;
    best.objective = std::numeric_limits<double>::infinity();
    for (int rst = 0; rst < restarts; ++rst) {
        KMeansResult run = lloyd(points, k, mix_seed(seed, kRestartTag, rst), max_iter);
        if (run.objective < best.objective) best = std::move(run);
    }
    return best;
}

double adjusted_rand_index(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("adjusted_rand_index: length mismatch");
    const size_t n = a.size();
    auto comb2 = [](double x) { return x * (x - 1.0) / 2.0; };

    std::map<std::pair<int, int>, long long> cells;
    std::unordered_map<int, long long> rows, cols;
    for (size_t i = 0; i < n; ++i) {
        ++cells[{a[i], b[i]}];
        ++rows[a[i]];
        ++cols[b[i]];
    }
    double sum_cells = 0.0, sum_rows = 0.0, sum_cols = 0.0;
    for (const auto& [key, c] : cells) sum_cells += comb2(static_cast<double>(c));
    for (const auto& [key, c] : rows) sum_rows += comb2(static_cast<double>(c));
    for (const auto& [key, c] : cols) sum_cols += comb2(static_cast<double>(c));

    double total = comb2(static_cast<double>(n));
    double expected = total > 0.0 ? sum_rows * sum_cols / total : 0.0;
    double max_index = 0.5 * (sum_rows + sum_cols);
    double denom = max_index - expected;
    if (denom == 0.0) return 1.0;
    return (sum_cells - expected) / denom;
}

double average_precision(const Matrix& points, const std::vector<int>& labels) {
    const size_t n = labels.size();
    if (static_cast<size_t>(points.rows()) != n)
        throw std::invalid_argument("average_precision: labels/points length mismatch");
    struct Pair {
        double dist;
        std::uint32_t index;  // enumeration order, (i<j) lexicographic
        bool positive;
    };
    std::vector<Pair> pairs;
    pairs.reserve(n * (n - 1) / 2);
    std::uint32_t idx = 0;
    size_t positives = 0;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j, ++idx) {
            bool pos = labels[i] == labels[j];
            positives += pos;
            pairs.push_back({(points.row(i) - points.row(j)).norm(), idx, pos});
        }
    }
    if (positives == 0) throw std::invalid_argument("average_precision: no same-label pair");

    std::sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) {
        if (x.dist != y.dist) return x.dist < y.dist;
        return x.index < y.index;
    });

    double ap = 0.0;
    size_t hits = 0;
    for (size_t rank = 0; rank < pairs.size(); ++rank) {
        if (pairs[rank].positive) {
            ++hits;
            ap += static_cast<double>(hits) / static_cast<double>(rank + 1);
        }
    }
    return ap / static_cast<double>(positives);
}

}  // namespace sre
