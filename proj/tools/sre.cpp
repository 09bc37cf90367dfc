// Command-line front end for the sparse-eigenmaps shared library.
// Talks to the library exclusively through the C API.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sparse_eigenmaps.h"

namespace {

struct MatrixGuard {
    sre_matrix* m = nullptr;
    ~MatrixGuard() { sre_matrix_free(m); }
};

struct ObservedGuard {
    sre_observed* o = nullptr;
    ~ObservedGuard() { sre_observed_free(o); }
};

[[noreturn]] void die(const std::string& msg) {
    std::fprintf(stderr, "error: %s\n", msg.c_str());
    std::exit(1);
}

void check(sre_status status) {
    if (status != SRE_OK) die(sre_last_error());
}

std::vector<int> parse_blocks(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(std::stoi(cell));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laplacian eigenmaps of sparse, noisy kernel matrices"};
    app.require_subcommand(1);

    // Global options; SR_SEED / SR_THREADS env vars supply defaults.
    std::int64_t seed = -1;
    int threads = 0;
    std::string output;
    if (const char* env = std::getenv("SR_SEED")) seed = std::atoll(env);
    if (const char* env = std::getenv("SR_THREADS")) threads = std::atoi(env);
    app.add_option("--seed", seed, "Base RNG seed (default 0; overrides SR_SEED)");
    app.add_option("--threads", threads, "Worker threads for sweeps (overrides SR_THREADS)");
    app.add_option("--output,-o", output, "Output file path");

    // generate: dataset -> kernel CSV
    auto* generate = app.add_subcommand("generate", "Generate a dataset kernel CSV");
    std::string dataset = "swiss_roll";
    int n = 500, d_star = 3;
    double c = 5.0, sigma = 0.2;
    std::string blocks_arg = "50,50,50", points_out, distances_out, labels_out;
    double within = 0.5, between = 0.05;
    generate->add_option("--dataset", dataset, "swiss_roll | planted")->capture_default_str();
    generate->add_option("--n", n, "Point count (swiss_roll)")->capture_default_str();
    generate->add_option("--d-star", d_star, "Intrinsic dimension")->capture_default_str();
    generate->add_option("--c", c, "Curvature")->capture_default_str();
    generate->add_option("--sigma", sigma, "Gaussian kernel bandwidth")->capture_default_str();
    generate->add_option("--blocks", blocks_arg, "Planted block sizes")->capture_default_str();
    generate->add_option("--within", within, "Planted within-block weight")->capture_default_str();
    generate->add_option("--between", between, "Planted between-block weight")->capture_default_str();
    generate->add_option("--points-out", points_out, "Also write the raw points CSV");
    generate->add_option("--distances-out", distances_out, "Also write the distance matrix CSV");
    generate->add_option("--labels-out", labels_out, "Also write block labels (planted)");

    // corrupt: kernel + noise spec -> observed CSV
    auto* corrupt = app.add_subcommand("corrupt", "Apply noise and occlusion to a kernel");
    std::string kernel_path, distances_path, kind = "none";
    double alpha = 1.0, bias = 0.0, nu2 = 0.0, noise_sigma = 0.2, p = 1.0;
    corrupt->add_option("--kernel", kernel_path, "Kernel CSV")->required();
    corrupt->add_option("--distances", distances_path, "Distance CSV (distance_gaussian)");
    corrupt->add_option("--kind", kind, "none | beta | beta_biased | distance_gaussian")
        ->capture_default_str();
    corrupt->add_option("--alpha", alpha, "Beta fidelity")->capture_default_str();
    corrupt->add_option("--bias", bias, "Mean bias (beta_biased)")->capture_default_str();
    corrupt->add_option("--nu2", nu2, "Distance noise variance")->capture_default_str();
    corrupt->add_option("--noise-sigma", noise_sigma, "Kernel bandwidth (distance_gaussian)")
        ->capture_default_str();
    corrupt->add_option("--p", p, "Observation probability")->capture_default_str();

    // embed: kernel + r + d -> embedding CSV
    auto* embed = app.add_subcommand("embed", "Laplacian eigenmaps embedding");
    double reg = 0.0;
    int dim = 2;
    embed->add_option("--kernel", kernel_path, "Kernel CSV")->required();
    embed->add_option("--r", reg, "Regularization")->capture_default_str();
    embed->add_option("--d", dim, "Embedding dimension")->capture_default_str();

    // align: two embeddings -> report
    auto* align = app.add_subcommand("align", "Procrustes-align two embeddings");
    std::string align_a, align_b;
    align->add_option("embedding", align_a, "Embedding CSV")->required();
    align->add_option("reference", align_b, "Reference embedding CSV")->required();

    // diagnose: concentration + Davis-Kahan diagnostics -> CSV
    auto* diagnose = app.add_subcommand("diagnose", "Concentration diagnostics");
    int interval_count = 3, trials = 10;
    diagnose->add_option("--kernel", kernel_path, "Kernel CSV")->required();
    diagnose->add_option("--distances", distances_path, "Distance CSV (distance_gaussian)");
    diagnose->add_option("--kind", kind, "Noise kind")->capture_default_str();
    diagnose->add_option("--alpha", alpha, "Beta fidelity")->capture_default_str();
    diagnose->add_option("--bias", bias, "Mean bias")->capture_default_str();
    diagnose->add_option("--nu2", nu2, "Distance noise variance")->capture_default_str();
    diagnose->add_option("--noise-sigma", noise_sigma, "Kernel bandwidth")->capture_default_str();
    diagnose->add_option("--p", p, "Observation probability")->capture_default_str();
    diagnose->add_option("--r", reg, "Regularization (> 0)")->capture_default_str();
    diagnose->add_option("--interval-count", interval_count,
                         "Leading eigenvalues captured by the selection interval")
        ->capture_default_str();
    diagnose->add_option("--trials", trials, "Monte-Carlo trials")->capture_default_str();

    // sweep: config -> results CSV
    auto* sweep = app.add_subcommand("sweep", "Run a sweep config");
    std::string config_path;
    sweep->add_option("config", config_path, "Sweep config file")->required();

    // usvt: observed -> completed CSV
    auto* usvt = app.add_subcommand("usvt", "USVT matrix completion");
    std::string usvt_input;
    double eta = 0.02, p_known = -1.0;
    usvt->add_option("--input", usvt_input, "Observed matrix CSV")->required();
    usvt->add_option("--eta", eta, "Threshold slack")->capture_default_str();
    usvt->add_option("--p", p_known,
                     "Observation probability (default: nonzero off-diagonal fraction)");

    CLI11_PARSE(app, argc, argv);
    const std::uint64_t useed = seed >= 0 ? static_cast<std::uint64_t>(seed) : 0;

    if (generate->parsed()) {
        if (output.empty()) die("generate needs --output");
        MatrixGuard kernel, points, dists, labels;
        if (dataset == "swiss_roll") {
            check(sre_swiss_roll_kernel(n, d_star, c, sigma, useed, &kernel.m,
                                        points_out.empty() ? nullptr : &points.m,
                                        distances_out.empty() ? nullptr : &dists.m));
        } else if (dataset == "planted") {
            std::vector<int> blocks = parse_blocks(blocks_arg);
            check(sre_planted_kernel(blocks.data(), static_cast<int>(blocks.size()), within,
                                     between, &kernel.m,
                                     labels_out.empty() ? nullptr : &labels.m));
        } else {
            die("unknown dataset: " + dataset);
        }
        check(sre_matrix_save_csv(kernel.m, output.c_str()));
        if (points.m) check(sre_matrix_save_csv(points.m, points_out.c_str()));
        if (dists.m) check(sre_matrix_save_csv(dists.m, distances_out.c_str()));
        if (labels.m) check(sre_matrix_save_csv(labels.m, labels_out.c_str()));
    } else if (corrupt->parsed()) {
        if (output.empty()) die("corrupt needs --output");
        MatrixGuard kernel, dists;
        check(sre_load_kernel_csv(kernel_path.c_str(), &kernel.m));
        if (!distances_path.empty()) check(sre_matrix_load_csv(distances_path.c_str(), &dists.m));
        ObservedGuard obs;
        check(sre_corrupt(kernel.m, dists.m, kind.c_str(), alpha, bias, nu2, noise_sigma, p,
                          useed, &obs.o));
        check(sre_matrix_save_csv(sre_observed_matrix(obs.o), output.c_str()));
        std::printf("observed_fraction %.6f\n", sre_observed_fraction(obs.o));
    } else if (embed->parsed()) {
        if (output.empty()) die("embed needs --output");
        MatrixGuard kernel, emb;
        check(sre_load_kernel_csv(kernel_path.c_str(), &kernel.m));
        check(sre_embed(kernel.m, reg, dim, &emb.m));
        check(sre_matrix_save_csv(emb.m, output.c_str()));
    } else if (align->parsed()) {
        MatrixGuard a, b;
        check(sre_matrix_load_csv(align_a.c_str(), &a.m));
        check(sre_matrix_load_csv(align_b.c_str(), &b.m));
        double residual = 0.0, rel_err = 0.0;
        check(sre_procrustes(a.m, b.m, &residual, &rel_err));
        std::printf("residual %.12g\nrel_err %.12g\n", residual, rel_err);
    } else if (diagnose->parsed()) {
        if (output.empty()) die("diagnose needs --output");
        MatrixGuard kernel, dists;
        check(sre_load_kernel_csv(kernel_path.c_str(), &kernel.m));
        if (!distances_path.empty()) check(sre_matrix_load_csv(distances_path.c_str(), &dists.m));
        check(sre_diagnose(kernel.m, dists.m, kind.c_str(), alpha, bias, nu2, noise_sigma, p,
                           useed, reg, interval_count, trials, output.c_str()));
    } else if (sweep->parsed()) {
        check(sre_run_sweep(config_path.c_str(), output.empty() ? nullptr : output.c_str(),
                            threads, seed));
    } else if (usvt->parsed()) {
        if (output.empty()) die("usvt needs --output");
        MatrixGuard y, est;
        check(sre_matrix_load_csv(usvt_input.c_str(), &y.m));
        check(sre_usvt_matrix(y.m, eta, p_known, &est.m));
        check(sre_matrix_save_csv(est.m, output.c_str()));
    }
    return 0;
}
