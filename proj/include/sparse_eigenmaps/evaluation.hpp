#pragma once

#include <cstdint>
#include <vector>

#include "sparse_eigenmaps/matrix.hpp"

namespace sre {

struct KMeansResult {
    std::vector<int> labels;  // 0 .. k-1
    double objective = 0.0;   // total within-cluster squared distance
    bool converged = false;
};

/// Lloyd's algorithm with k-means++ seeding; `restarts` independent runs,
/// best objective kept. Deterministic per seed.
KMeansResult kmeans(const Matrix& points, int k, std::uint64_t seed, int max_iter = 100,
                    int restarts = 10);

/// Hubert-Arabie adjusted Rand index; 1 for identical partitions (up to
/// relabeling). Degenerate contingency (zero denominator) returns 1.
double adjusted_rand_index(const std::vector<int>& a, const std::vector<int>& b);

/// Pairwise-retrieval average precision: all unordered pairs sorted by
/// increasing Euclidean distance (ties broken by pair enumeration order,
/// (i,j) with i<j lexicographic); AP is the mean of precision-at-rank over
/// the same-label pairs. Requires at least one same-label pair.
double average_precision(const Matrix& points, const std::vector<int>& labels);

}  // namespace sre
