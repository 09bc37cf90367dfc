#include "sparse_eigenmaps/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "sparse_eigenmaps/alignment.hpp"
#include "sparse_eigenmaps/embedding.hpp"
#include "sparse_eigenmaps/evaluation.hpp"
#include "sparse_eigenmaps/laplacian.hpp"
#include "sparse_eigenmaps/rng.hpp"

namespace sre {

namespace {

constexpr std::uint64_t kKmeansTag = 0x6b6d65616e73ULL;  // "kmeans"
constexpr std::uint64_t kSweepTrialTag = 0x7377656570ULL;  // "sweep"

struct NoiseCell {
    double alpha = 0.0, bias = 0.0, nu2 = 0.0;
};

std::vector<NoiseCell> noise_cells(const SweepConfig& cfg) {
    std::vector<NoiseCell> cells;
    switch (cfg.kind) {
        case NoiseKind::none:
            cells.push_back({});
            break;
        case NoiseKind::beta:
            for (double a : cfg.alpha_grid) cells.push_back({a, 0.0, 0.0});
            break;
        case NoiseKind::beta_biased:
            for (double a : cfg.alpha_grid)
                for (double b : cfg.bias_grid) cells.push_back({a, b, 0.0});
            break;
        case NoiseKind::distance_gaussian:
            for (double v : cfg.nu2_grid) cells.push_back({0.0, 0.0, v});
            break;
    }
    return cells;
}

std::uint64_t noise_param_hash(NoiseKind kind, const NoiseCell& cell) {
    std::uint64_t h = splitmix64(static_cast<std::uint64_t>(kind));
    h = splitmix64(h ^ std::bit_cast<std::uint64_t>(cell.alpha));
    h = splitmix64(h ^ std::bit_cast<std::uint64_t>(cell.bias));
    h = splitmix64(h ^ std::bit_cast<std::uint64_t>(cell.nu2));
    return h;
}

double sample_stderr(const std::vector<double>& v, double mean) {
    if (v.size() < 2) return 0.0;
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / (static_cast<double>(v.size()) - 1.0)) /
           std::sqrt(static_cast<double>(v.size()));
}

}  // namespace

std::string to_string(MetricKind m) {
    switch (m) {
        case MetricKind::rel_err: return "rel_err";
        case MetricKind::ari: return "ari";
        case MetricKind::ap: return "ap";
    }
    return "?";
}

void SweepConfig::validate() const {
    if (alpha_grid.empty() || bias_grid.empty() || nu2_grid.empty() || p_grid.empty() ||
        r_grid.empty() || d_grid.empty())
        throw std::invalid_argument("SweepConfig: all grids must be nonempty");
    if (trials < 1) throw std::invalid_argument("SweepConfig: trials must be >= 1");
    for (double p : p_grid)
        if (p < 0.0 || p > 1.0) throw std::invalid_argument("SweepConfig: p outside [0,1]");
    for (double r : r_grid)
        if (r < 0.0) throw std::invalid_argument("SweepConfig: negative r");
    for (int d : d_grid)
        if (d < 1) throw std::invalid_argument("SweepConfig: d must be >= 1");
    if ((kind == NoiseKind::beta || kind == NoiseKind::beta_biased))
        for (double a : alpha_grid)
            if (a <= 0.0) throw std::invalid_argument("SweepConfig: alpha must be > 0");
}

SweepInputs load_sweep_inputs(const SweepConfig& cfg) {
    const DatasetSpec& ds = cfg.dataset;
    SweepInputs in{KernelMatrix(SymmetricMatrix(1)), std::nullopt, {}, ""};
    switch (ds.type) {
        case DatasetType::swiss_roll: {
            PointCloud cloud = sample_swiss_roll(ds.n, ds.d_star, ds.c, ds.seed);
            DistanceMatrix dist = pairwise_distances(cloud);
            in.kernel = gaussian_kernel(dist, ds.sigma);
            in.distances = std::move(dist);
            in.dataset_name = "swiss_roll";
            break;
        }
        case DatasetType::kernel_csv:
            in.kernel = load_kernel_csv(ds.path);
            in.dataset_name = "kernel_csv";
            break;
        case DatasetType::edge_list:
            in.kernel = load_edge_list(ds.path, ds.n);
            in.dataset_name = "edge_list";
            break;
        case DatasetType::planted:
            in.kernel = planted_partition_kernel(ds.blocks, ds.within, ds.between);
            in.labels = planted_partition_labels(ds.blocks);
            in.dataset_name = "planted";
            break;
    }
    if (cfg.metric != MetricKind::rel_err) {
        if (!cfg.labels_path.empty()) in.labels = load_labels_csv(cfg.labels_path);
        if (in.labels.empty())
            throw std::invalid_argument("sweep: metric " + to_string(cfg.metric) + " needs labels");
        if (static_cast<int>(in.labels.size()) != in.kernel.n())
            throw std::invalid_argument("sweep: labels length does not match dataset size");
    }
    return in;
}

SweepResult run_sweep(const SweepConfig& cfg, int threads) {
    return run_sweep(cfg, load_sweep_inputs(cfg), threads);
}

SweepResult run_sweep(const SweepConfig& cfg, const SweepInputs& inputs, int threads) {
    cfg.validate();
    const int n = inputs.kernel.n();
    for (int d : cfg.d_grid)
        if (d > n - 1) throw std::invalid_argument("sweep: d must be < n");
    if (cfg.kind == NoiseKind::distance_gaussian && !inputs.distances)
        throw std::invalid_argument("sweep: distance_gaussian needs a distance-based dataset");

    const std::vector<NoiseCell> cells = noise_cells(cfg);
    const size_t NC = cells.size(), NP = cfg.p_grid.size(), NR = cfg.r_grid.size(),
                 ND = cfg.d_grid.size();
    const size_t T = static_cast<size_t>(cfg.trials);
    const size_t metrics_per = cfg.metric == MetricKind::rel_err ? 2 : 1;

    // Clean references, shared across all cells.
    const bool need_ref = cfg.metric == MetricKind::rel_err;
    std::vector<std::vector<Matrix>> ref(NR);       // [r][d] -> coordinates
    std::vector<Matrix> ref_r0(ND);
    if (need_ref) {
        for (size_t ir = 0; ir < NR; ++ir) {
            Spectrum spec = eigh(normalized_laplacian(regularize(inputs.kernel.base(), cfg.r_grid[ir])));
            ref[ir].resize(ND);
            for (size_t id = 0; id < ND; ++id)
                ref[ir][id] = eigenmaps_embed(spec, cfg.d_grid[id]).coordinates;
        }
        Spectrum spec0 = eigh(normalized_laplacian(inputs.kernel.base()));
        for (size_t id = 0; id < ND; ++id)
            ref_r0[id] = eigenmaps_embed(spec0, cfg.d_grid[id]).coordinates;
    }

    SweepResult result;
    result.dataset_name = inputs.dataset_name;
    result.rows.resize(NC * NP * NR * ND * T * metrics_per);

    const DistanceMatrix* distances = inputs.distances ? &*inputs.distances : nullptr;

    auto run_task = [&](size_t cell_idx, size_t t) {
        const NoiseCell& cell = cells[cell_idx];
        NoiseSpec spec;
        spec.kind = cfg.kind;
        spec.alpha = cell.alpha;
        spec.bias = cell.bias;
        spec.nu2 = cell.nu2;
        spec.sigma = cfg.noise_sigma;
        spec.seed = mix_seed(mix_seed(cfg.base_seed, kSweepTrialTag, t),
                             noise_param_hash(cfg.kind, cell));
        KernelMatrix noisy = apply_noise(inputs.kernel, spec, distances);

        for (size_t ip = 0; ip < NP; ++ip) {
            spec.p = cfg.p_grid[ip];
            ObservedMatrix obs = apply_occlusion(noisy, spec);
            for (size_t ir = 0; ir < NR; ++ir) {
                double r = cfg.r_grid[ir];
                Spectrum lspec = eigh(normalized_laplacian(regularize(obs.y, r)));
                for (size_t id = 0; id < ND; ++id) {
                    int d = cfg.d_grid[id];
                    Matrix coords = eigenmaps_embed(lspec, d).coordinates;

                    size_t base = ((((cell_idx * NP + ip) * NR + ir) * ND + id) * T + t) *
                                  metrics_per;
                    auto fill = [&](size_t m, const std::string& metric, double value) {
                        SweepRow& row = result.rows[base + m];
                        row.kind = cfg.kind;
                        row.alpha = cell.alpha;
                        row.bias = cell.bias;
                        row.nu2 = cell.nu2;
                        row.p = spec.p;
                        row.r = r;
                        row.d = d;
                        row.trial = static_cast<int>(t);
                        row.metric = metric;
                        row.value = value;
                        row.flag = "ok";
                    };
                    switch (cfg.metric) {
                        case MetricKind::rel_err:
                            fill(0, "rel_err", subspace_distance(coords, ref[ir][id]));
                            fill(1, "rel_err_r0", subspace_distance(coords, ref_r0[id]));
                            break;
                        case MetricKind::ari: {
                            KMeansResult km =
                                kmeans(coords, cfg.k, mix_seed(spec.seed, kKmeansTag));
                            fill(0, "ari", adjusted_rand_index(km.labels, inputs.labels));
                            break;
                        }
                        case MetricKind::ap:
                            fill(0, "ap", average_precision(coords, inputs.labels));
                            break;
                    }
                }
            }
        }
    };

    const size_t n_tasks = NC * T;
    int nthreads = std::max(1, threads);
    if (nthreads == 1) {
        for (size_t task = 0; task < n_tasks; ++task) run_task(task / T, task % T);
    } else {
        std::atomic<size_t> next{0};
        std::mutex err_mutex;
        std::exception_ptr first_error;
        auto worker = [&] {
            for (;;) {
                size_t task = next.fetch_add(1);
                if (task >= n_tasks) return;
                try {
                    run_task(task / T, task % T);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    // Per-cell summaries, in row order.
    for (size_t c = 0; c < NC; ++c)
        for (size_t ip = 0; ip < NP; ++ip)
            for (size_t ir = 0; ir < NR; ++ir)
                for (size_t id = 0; id < ND; ++id)
                    for (size_t m = 0; m < metrics_per; ++m) {
                        std::vector<double> vals;
                        int excluded = 0;
                        std::string metric;
                        for (size_t t = 0; t < T; ++t) {
                            const SweepRow& row =
                                result.rows[((((c * NP + ip) * NR + ir) * ND + id) * T + t) *
                                                metrics_per +
                                            m];
                            metric = row.metric;
                            if (row.flag == "ok")
                                vals.push_back(row.value);
                            else
                                ++excluded;
                        }
                        double mean = 0.0;
                        for (double v : vals) mean += v;
                        if (!vals.empty()) mean /= static_cast<double>(vals.size());
                        result.summary.push_back({cfg.kind, cells[c].alpha, cells[c].bias,
                                                  cells[c].nu2, cfg.p_grid[ip], cfg.r_grid[ir],
                                                  cfg.d_grid[id], metric, mean,
                                                  sample_stderr(vals, mean),
                                                  static_cast<int>(vals.size()), excluded});
                    }
    return result;
}

void write_results_csv(const SweepResult& result, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "# sparse-eigenmaps sweep results\n";
    out << "# dataset = " << result.dataset_name << "\n";
    out << "# rel_err reference = embedding of clean kernel + r*J (same r as the noisy side); "
           "rel_err_r0 rows use the unregularized clean reference\n";
    out << "# rel_err normalization = Frobenius norm of the reference basis\n";
    out << "dataset,kind,alpha,bias,nu2,p,r,d,trial,metric,value,flag\n";
    for (const SweepRow& row : result.rows) {
        out << result.dataset_name << ',' << to_string(row.kind) << ','
            << format_double(row.alpha) << ',' << format_double(row.bias) << ','
            << format_double(row.nu2) << ',' << format_double(row.p) << ','
            << format_double(row.r) << ',' << row.d << ',' << row.trial << ',' << row.metric
            << ',' << format_double(row.value) << ',' << row.flag << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_summary_csv(const SweepResult& result, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "dataset,kind,alpha,bias,nu2,p,r,d,metric,mean,stderr,count,excluded\n";
    for (const CellSummary& s : result.summary) {
        out << result.dataset_name << ',' << to_string(s.kind) << ',' << format_double(s.alpha)
            << ',' << format_double(s.bias) << ',' << format_double(s.nu2) << ','
            << format_double(s.p) << ',' << format_double(s.r) << ',' << s.d << ',' << s.metric
            << ',' << format_double(s.mean) << ',' << format_double(s.stderr_) << ',' << s.count
            << ',' << s.excluded << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_heatmap_pgm(const SweepResult& result, const SweepConfig& cfg,
                       const std::string& path) {
    const std::vector<NoiseCell> cells = noise_cells(cfg);
    const size_t NC = cells.size(), NP = cfg.p_grid.size();
    const double r0 = cfg.r_grid.front();
    const int d0 = cfg.d_grid.front();
    const std::string metric = to_string(cfg.metric);

    // Cell means for the primary metric at the first r and d of the grids.
    std::vector<double> grid(NC * NP, 0.0);
    for (const CellSummary& s : result.summary) {
        if (s.metric != metric || s.r != r0 || s.d != d0) continue;
        size_t ci = 0, pi = 0;
        for (; ci < NC; ++ci)
            if (cells[ci].alpha == s.alpha && cells[ci].bias == s.bias && cells[ci].nu2 == s.nu2)
                break;
        for (; pi < NP; ++pi)
            if (cfg.p_grid[pi] == s.p) break;
        if (ci < NC && pi < NP) grid[ci * NP + pi] = s.mean;
    }
    double lo = *std::min_element(grid.begin(), grid.end());
    double hi = *std::max_element(grid.begin(), grid.end());

    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "P2\n" << NP << ' ' << NC << "\n255\n";
    for (size_t c = 0; c < NC; ++c) {
        for (size_t p = 0; p < NP; ++p) {
            int v = hi > lo ? static_cast<int>(std::lround((grid[c * NP + p] - lo) / (hi - lo) *
                                                           255.0))
                            : 0;
            if (p) out << ' ';
            out << v;
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(std::stod(trim(cell)));
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    for (double v : parse_double_list(s)) out.push_back(static_cast<int>(v));
    return out;
}

}  // namespace

SweepConfig parse_sweep_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path);
    SweepConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "dataset") {
                if (value == "swiss_roll") cfg.dataset.type = DatasetType::swiss_roll;
                else if (value == "kernel_csv") cfg.dataset.type = DatasetType::kernel_csv;
                else if (value == "edge_list") cfg.dataset.type = DatasetType::edge_list;
                else if (value == "planted") cfg.dataset.type = DatasetType::planted;
                else throw std::invalid_argument("unknown dataset type: " + value);
            } else if (key == "n") cfg.dataset.n = std::stoi(value);
            else if (key == "d_star") cfg.dataset.d_star = std::stoi(value);
            else if (key == "c") cfg.dataset.c = std::stod(value);
            else if (key == "sigma") { cfg.dataset.sigma = std::stod(value); cfg.noise_sigma = cfg.dataset.sigma; }
            else if (key == "dataset_seed") cfg.dataset.seed = std::stoull(value);
            else if (key == "path") cfg.dataset.path = value;
            else if (key == "blocks") cfg.dataset.blocks = parse_int_list(value);
            else if (key == "within") cfg.dataset.within = std::stod(value);
            else if (key == "between") cfg.dataset.between = std::stod(value);
            else if (key == "kind") cfg.kind = noise_kind_from_string(value);
            else if (key == "alpha_grid") cfg.alpha_grid = parse_double_list(value);
            else if (key == "bias_grid") cfg.bias_grid = parse_double_list(value);
            else if (key == "nu2_grid") cfg.nu2_grid = parse_double_list(value);
            else if (key == "noise_sigma") cfg.noise_sigma = std::stod(value);
            else if (key == "p_grid") cfg.p_grid = parse_double_list(value);
            else if (key == "r_grid") cfg.r_grid = parse_double_list(value);
            else if (key == "d_grid") cfg.d_grid = parse_int_list(value);
            else if (key == "trials") cfg.trials = std::stoi(value);
            else if (key == "base_seed") cfg.base_seed = std::stoull(value);
            else if (key == "metric") {
                if (value == "rel_err") cfg.metric = MetricKind::rel_err;
                else if (value == "ari") cfg.metric = MetricKind::ari;
                else if (value == "ap") cfg.metric = MetricKind::ap;
                else throw std::invalid_argument("unknown metric: " + value);
            } else if (key == "k") cfg.k = std::stoi(value);
            else if (key == "labels_path") cfg.labels_path = value;
            else if (key == "output") cfg.output = value;
            else if (key == "heatmap_pgm") cfg.heatmap_pgm = value;
            else throw std::invalid_argument("unknown key: " + key);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    cfg.validate();
    return cfg;
}

}  // namespace sre
