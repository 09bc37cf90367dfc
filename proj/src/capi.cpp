#include "sparse_eigenmaps.h"

#include <cstring>
#include <string>

#include "sparse_eigenmaps/alignment.hpp"
#include "sparse_eigenmaps/dataset.hpp"
#include "sparse_eigenmaps/diagnostics.hpp"
#include "sparse_eigenmaps/embedding.hpp"
#include "sparse_eigenmaps/evaluation.hpp"
#include "sparse_eigenmaps/laplacian.hpp"
#include "sparse_eigenmaps/noise.hpp"
#include "sparse_eigenmaps/sweep.hpp"
#include "sparse_eigenmaps/usvt.hpp"

struct sre_matrix {
    sre::Matrix m;
};

struct sre_observed {
    sre::ObservedMatrix obs;
    sre_matrix view;  // borrowed Y exposed through sre_observed_matrix
};

namespace {

thread_local std::string g_last_error;

sre_status fail(sre_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

template <typename Fn>
sre_status guarded(Fn&& fn) {
    try {
        fn();
        return SRE_OK;
    } catch (const std::invalid_argument& e) {
        return fail(SRE_INVALID_ARGUMENT, e.what());
    } catch (const std::runtime_error& e) {
        return fail(SRE_IO_ERROR, e.what());
    } catch (const std::exception& e) {
        return fail(SRE_UNKNOWN_ERROR, e.what());
    }
}

sre_matrix* wrap(sre::Matrix m) { return new sre_matrix{std::move(m)}; }

sre::NoiseSpec make_spec(const char* kind, double alpha, double bias, double nu2, double sigma,
                         double p, uint64_t seed) {
    sre::NoiseSpec spec;
    spec.kind = sre::noise_kind_from_string(kind ? kind : "none");
    spec.alpha = alpha;
    spec.bias = bias;
    spec.nu2 = nu2;
    spec.sigma = sigma;
    spec.p = p;
    spec.seed = seed;
    spec.validate();
    return spec;
}

const sre::DistanceMatrix* as_distances(const sre_matrix* distances,
                                        std::optional<sre::DistanceMatrix>& storage) {
    if (!distances) return nullptr;
    storage.emplace(sre::SymmetricMatrix::from_dense(distances->m));
    return &*storage;
}

}  // namespace

extern "C" {

const char* sre_last_error(void) { return g_last_error.c_str(); }

void sre_matrix_free(sre_matrix* m) { delete m; }

int sre_matrix_rows(const sre_matrix* m) { return m ? static_cast<int>(m->m.rows()) : 0; }
int sre_matrix_cols(const sre_matrix* m) { return m ? static_cast<int>(m->m.cols()) : 0; }

double sre_matrix_get(const sre_matrix* m, int i, int j) {
    if (!m || i < 0 || j < 0 || i >= m->m.rows() || j >= m->m.cols()) return 0.0;
    return m->m(i, j);
}

sre_status sre_matrix_load_csv(const char* path, sre_matrix** out) {
    if (!path || !out) return fail(SRE_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = wrap(sre::load_matrix_csv(path)); });
}

sre_status sre_matrix_save_csv(const sre_matrix* m, const char* path) {
    if (!m || !path) return fail(SRE_INVALID_ARGUMENT, "null argument");
    return guarded([&] { sre::save_matrix_csv(m->m, path); });
}

sre_status sre_swiss_roll_kernel(int n, int d_star, double c, double sigma, uint64_t seed,
                                 sre_matrix** kernel_out, sre_matrix** points_out,
                                 sre_matrix** distances_out) {
    if (!kernel_out) return fail(SRE_INVALID_ARGUMENT, "null kernel_out");
    return guarded([&] {
        sre::PointCloud cloud = sre::sample_swiss_roll(n, d_star, c, seed);
        sre::DistanceMatrix dist = sre::pairwise_distances(cloud);
        sre::KernelMatrix kernel = sre::gaussian_kernel(dist, sigma);
        *kernel_out = wrap(kernel.base().mat());
        if (points_out) *points_out = wrap(cloud.points);
        if (distances_out) *distances_out = wrap(dist.base().mat());
    });
}

sre_status sre_planted_kernel(const int* blocks, int n_blocks, double within, double between,
                              sre_matrix** kernel_out, sre_matrix** labels_out) {
    if (!blocks || n_blocks < 1 || !kernel_out) return fail(SRE_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        std::vector<int> sizes(blocks, blocks + n_blocks);
        *kernel_out = wrap(sre::planted_partition_kernel(sizes, within, between).base().mat());
        if (labels_out) {
            std::vector<int> labels = sre::planted_partition_labels(sizes);
            sre::Matrix lm(labels.size(), 1);
            for (size_t i = 0; i < labels.size(); ++i) lm(i, 0) = labels[i];
            *labels_out = wrap(std::move(lm));
        }
    });
}

sre_status sre_load_kernel_csv(const char* path, sre_matrix** out) {
    if (!path || !out) return fail(SRE_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = wrap(sre::load_kernel_csv(path).base().mat()); });
}

sre_status sre_load_edge_list(const char* path, int n, sre_matrix** out, int* duplicate_edges_out,
                              int* ignored_self_loops_out) {
    if (!path || !out) return fail(SRE_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        sre::EdgeListInfo info;
        *out = wrap(sre::load_edge_list(path, n, &info).base().mat());
        if (duplicate_edges_out) *duplicate_edges_out = info.duplicate_edges;
        if (ignored_self_loops_out) *ignored_self_loops_out = info.ignored_self_loops;
    });
}

sre_status sre_corrupt(const sre_matrix* kernel, const sre_matrix* distances, const char* kind,
                       double alpha, double bias, double nu2, double sigma, double p,
                       uint64_t seed, sre_observed** out) {
    if (!kernel || !out) return fail(SRE_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        sre::NoiseSpec spec = make_spec(kind, alpha, bias, nu2, sigma, p, seed);
        sre::KernelMatrix k(sre::SymmetricMatrix::from_dense(kernel->m));
        std::optional<sre::DistanceMatrix> dist_storage;
        sre::ObservedMatrix obs = sre::corrupt(k, spec, as_distances(distances, dist_storage));
        auto* handle = new sre_observed{std::move(obs), {}};
        handle->view.m = handle->obs.y.mat();
        *out = handle;
    });
}

void sre_observed_free(sre_observed* o) { delete o; }

const sre_matrix* sre_observed_matrix(const sre_observed* o) { return o ? &o->view : nullptr; }

double sre_observed_fraction(const sre_observed* o) {
    return o ? o->obs.observed_fraction() : 0.0;
}

sre_status sre_embed(const sre_matrix* kernel, double r, int d, sre_matrix** out) {
    if (!kernel || !out) return fail(SRE_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        sre::SymmetricMatrix k = sre::SymmetricMatrix::from_dense(kernel->m);
        sre::SymmetricMatrix l = sre::normalized_laplacian(sre::regularize(k, r));
        *out = wrap(sre::eigenmaps_embed(l, d).coordinates);
    });
}

sre_status sre_procrustes(const sre_matrix* x, const sre_matrix* x_ref, double* residual_out,
                          double* rel_err_out) {
    if (!x || !x_ref) return fail(SRE_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        sre::AlignmentReport rep = sre::procrustes(x->m, x_ref->m);
        if (residual_out) *residual_out = rep.residual;
        if (rel_err_out) *rel_err_out = rep.rel_err;
    });
}

sre_status sre_kmeans(const sre_matrix* points, int k, uint64_t seed, int* labels_out) {
    if (!points || !labels_out) return fail(SRE_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        sre::KMeansResult res = sre::kmeans(points->m, k, seed);
        std::memcpy(labels_out, res.labels.data(), res.labels.size() * sizeof(int));
    });
}

sre_status sre_adjusted_rand_index(const int* a, const int* b, int n, double* out) {
    if (!a || !b || !out || n < 1) return fail(SRE_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = sre::adjusted_rand_index(std::vector<int>(a, a + n), std::vector<int>(b, b + n));
    });
}

sre_status sre_average_precision(const sre_matrix* points, const int* labels, double* out) {
    if (!points || !labels || !out) return fail(SRE_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        std::vector<int> lv(labels, labels + points->m.rows());
        *out = sre::average_precision(points->m, lv);
    });
}

sre_status sre_usvt(const sre_observed* y, double eta, double p_known, sre_matrix** out) {
    if (!y || !out) return fail(SRE_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        sre::UsvtConfig cfg;
        cfg.eta = eta;
        cfg.p_known = p_known;
        *out = wrap(sre::usvt_complete(y->obs, cfg).mat());
    });
}

sre_status sre_usvt_matrix(const sre_matrix* y, double eta, double p_known, sre_matrix** out) {
    if (!y || !out) return fail(SRE_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        sre::UsvtConfig cfg;
        cfg.eta = eta;
        cfg.p_known = p_known;
        *out = wrap(sre::usvt_complete(sre::SymmetricMatrix::from_dense(y->m), cfg).mat());
    });
}

sre_status sre_diagnose(const sre_matrix* kernel, const sre_matrix* distances, const char* kind,
                        double alpha, double bias, double nu2, double sigma, double p,
                        uint64_t seed, double r, int interval_count, int trials,
                        const char* out_csv_path) {
    if (!kernel || !out_csv_path) return fail(SRE_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        sre::NoiseSpec spec = make_spec(kind, alpha, bias, nu2, sigma, p, seed);
        sre::KernelMatrix k(sre::SymmetricMatrix::from_dense(kernel->m));
        std::optional<sre::DistanceMatrix> dist_storage;
        sre::DiagnosticsRun run = sre::run_diagnostics(
            k, spec, r, interval_count, trials, as_distances(distances, dist_storage));
        sre::write_diagnostics_csv(run, out_csv_path);
    });
}

sre_status sre_run_sweep(const char* config_path, const char* output_override, int threads,
                         int64_t seed_override) {
    if (!config_path) return fail(SRE_INVALID_ARGUMENT, "null config path");
    return guarded([&] {
        sre::SweepConfig cfg = sre::parse_sweep_config(config_path);
        if (output_override && *output_override) cfg.output = output_override;
        if (seed_override >= 0) cfg.base_seed = static_cast<uint64_t>(seed_override);
        sre::SweepResult result = sre::run_sweep(cfg, threads <= 0 ? 1 : threads);
        sre::write_results_csv(result, cfg.output);
        sre::write_summary_csv(result, cfg.output + ".summary");
        if (!cfg.heatmap_pgm.empty()) sre::write_heatmap_pgm(result, cfg, cfg.heatmap_pgm);
    });
}

}  // extern "C"
