/* C API for the sparse-eigenmaps library.
 *
 * All functions return 0 on success or a nonzero sre_status; on failure a
 * human-readable message is available from sre_last_error() (thread-local).
 * Objects are opaque handles released with their matching *_free function.
 * Handles returned through out-parameters are owned by the caller. NULL
 * frees are no-ops.
 */
#ifndef SPARSE_EIGENMAPS_H
#define SPARSE_EIGENMAPS_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sre_status {
    SRE_OK = 0,
    SRE_INVALID_ARGUMENT = 1,
    SRE_IO_ERROR = 2,
    SRE_NUMERIC_ERROR = 3,
    SRE_UNKNOWN_ERROR = 4
} sre_status;

/* Dense real matrix. */
typedef struct sre_matrix sre_matrix;
/* Sparse noisy observation: matrix plus occlusion mask and provenance. */
typedef struct sre_observed sre_observed;

const char* sre_last_error(void);

/* ---- matrices ---- */
void sre_matrix_free(sre_matrix* m);
int sre_matrix_rows(const sre_matrix* m);
int sre_matrix_cols(const sre_matrix* m);
double sre_matrix_get(const sre_matrix* m, int i, int j);
sre_status sre_matrix_load_csv(const char* path, sre_matrix** out);
sre_status sre_matrix_save_csv(const sre_matrix* m, const char* path);

/* ---- datasets ---- */
/* Swiss-roll point cloud kernelized with a Gaussian kernel. Also exposes the
 * raw points and pairwise distances when the out-pointers are non-NULL. */
sre_status sre_swiss_roll_kernel(int n, int d_star, double c, double sigma, uint64_t seed,
                                 sre_matrix** kernel_out, sre_matrix** points_out,
                                 sre_matrix** distances_out);
/* Deterministic planted-partition block kernel; blocks is an array of
 * n_blocks sizes. labels_out (optional) receives block labels, one per row,
 * as a 1-column matrix. */
sre_status sre_planted_kernel(const int* blocks, int n_blocks, double within, double between,
                              sre_matrix** kernel_out, sre_matrix** labels_out);
sre_status sre_load_kernel_csv(const char* path, sre_matrix** out);
sre_status sre_load_edge_list(const char* path, int n, sre_matrix** out,
                              int* duplicate_edges_out, int* ignored_self_loops_out);

/* ---- corruption (noise + occlusion) ---- */
/* kind: "none" | "beta" | "beta_biased" | "distance_gaussian".
 * distances may be NULL except for distance_gaussian. */
sre_status sre_corrupt(const sre_matrix* kernel, const sre_matrix* distances, const char* kind,
                       double alpha, double bias, double nu2, double sigma, double p,
                       uint64_t seed, sre_observed** out);
void sre_observed_free(sre_observed* o);
/* Borrowed view of Y; valid while the observed handle lives. */
const sre_matrix* sre_observed_matrix(const sre_observed* o);
double sre_observed_fraction(const sre_observed* o);

/* ---- Laplacian eigenmaps ---- */
/* Embedding of the kernel regularized by r: coordinates are the d
 * eigenvectors of L(K + rJ) following the top one. */
sre_status sre_embed(const sre_matrix* kernel, double r, int d, sre_matrix** out);

/* ---- alignment ---- */
sre_status sre_procrustes(const sre_matrix* x, const sre_matrix* x_ref, double* residual_out,
                          double* rel_err_out);

/* ---- evaluation ---- */
/* labels arrays hold one nonnegative integer per point. */
sre_status sre_kmeans(const sre_matrix* points, int k, uint64_t seed, int* labels_out);
sre_status sre_adjusted_rand_index(const int* a, const int* b, int n, double* out);
sre_status sre_average_precision(const sre_matrix* points, const int* labels, double* out);

/* ---- USVT baseline ---- */
/* p_known < 0 estimates the observation rate from the mask (observed
 * handle) or from the nonzero off-diagonal fraction (bare matrix). */
sre_status sre_usvt(const sre_observed* y, double eta, double p_known, sre_matrix** out);
sre_status sre_usvt_matrix(const sre_matrix* y, double eta, double p_known, sre_matrix** out);

/* ---- diagnostics ---- */
/* Writes the per-trial diagnostics CSV (degree concentration, squared-
 * Laplacian deviation and rate, Davis-Kahan check). interval_count selects
 * how many leading eigenvalues of the clean squared Laplacian the interval
 * captures. */
sre_status sre_diagnose(const sre_matrix* kernel, const sre_matrix* distances, const char* kind,
                        double alpha, double bias, double nu2, double sigma, double p,
                        uint64_t seed, double r, int interval_count, int trials,
                        const char* out_csv_path);

/* ---- sweeps ---- */
/* Runs the sweep described by the config file; writes the results CSV, a
 * "<output>.summary" CSV, and the optional PGM heatmap. threads <= 0 uses 1.
 * seed_override >= 0 replaces the config's base_seed. Output paths in the
 * config may be overridden with output_override (NULL keeps the config's). */
sre_status sre_run_sweep(const char* config_path, const char* output_override, int threads,
                         int64_t seed_override);

#ifdef __cplusplus
}
#endif

#endif /* SPARSE_EIGENMAPS_H */
