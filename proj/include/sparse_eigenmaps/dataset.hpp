#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sparse_eigenmaps/matrix.hpp"

namespace sre {

struct PointCloud {
    Matrix points;  // n rows, one point per row
    int n() const { return static_cast<int>(points.rows()); }
    int dim() const { return static_cast<int>(points.cols()); }
};

/// Hollow symmetric matrix with nonnegative entries (pairwise distances).
class DistanceMatrix {
public:
    explicit DistanceMatrix(SymmetricMatrix base);
    const SymmetricMatrix& base() const { return base_; }
    int n() const { return base_.n(); }
    double operator()(int i, int j) const { return base_(i, j); }

private:
    SymmetricMatrix base_;
};

/// Hollow symmetric matrix with entries in [0,1] (pairwise similarities).
class KernelMatrix {
public:
    explicit KernelMatrix(SymmetricMatrix base);
    const SymmetricMatrix& base() const { return base_; }
    int n() const { return base_.n(); }
    double operator()(int i, int j) const { return base_(i, j); }

private:
    SymmetricMatrix base_;
};

/// Samples n points uniformly from the d_star-dimensional unit cube and maps
/// (x, y) -> (c*x*cos(c*x), y, c*x*sin(c*x)) with x the first cube coordinate.
/// Output dimension is d_star + 1. Bit-reproducible per seed.
PointCloud sample_swiss_roll(int n, int d_star, double c, std::uint64_t seed);

DistanceMatrix pairwise_distances(const PointCloud& p);

/// Off-diagonal entries exp(-d(i,j)^2 / sigma^2); diagonal forced to zero.
KernelMatrix gaussian_kernel(const DistanceMatrix& d, double sigma);

/// Deterministic block kernel for planted-partition experiments: entry is
/// `within` for same-block pairs, `between` otherwise, diagonal zero.
KernelMatrix planted_partition_kernel(const std::vector<int>& block_sizes,
                                      double within, double between);
std::vector<int> planted_partition_labels(const std::vector<int>& block_sizes);

struct EdgeListInfo {
    int duplicate_edges = 0;   // duplicates resolved last-value-wins
    int ignored_self_loops = 0;
};

/// Loads a full symmetric kernel from matrix CSV; rejects asymmetry beyond
/// 1e-9 and out-of-range values.
KernelMatrix load_kernel_csv(const std::string& path);

/// Loads whitespace-separated "i j [w]" lines (0-based, '#' comments) into a
/// symmetric hollow kernel of order n; default weight 1.0.
KernelMatrix load_edge_list(const std::string& path, int n, EdgeListInfo* info = nullptr);

std::vector<int> load_labels_csv(const std::string& path);
void save_labels_csv(const std::vector<int>& labels, const std::string& path);

}  // namespace sre
