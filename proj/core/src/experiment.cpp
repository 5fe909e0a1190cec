#include "coresets/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "coresets/bico.hpp"
#include "coresets/datagen.hpp"
#include "coresets/dimred.hpp"
#include "coresets/geometry.hpp"
#include "coresets/group_sampling.hpp"
#include "coresets/kmeans.hpp"
#include "coresets/ray_maker.hpp"
#include "coresets/rng.hpp"
#include "coresets/sensitivity_sampling.hpp"
#include "coresets/stream_kmpp.hpp"

namespace coresets {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double v) {
    if (std::isnan(v)) return "";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Fields stay comma-free so the CSV needs no quoting.
std::string csv_field(std::string s) {
    for (char& c : s)
        if (c == ',' || c == '\n') c = ';';
    return s;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

std::vector<std::string> tokenize(const std::string& value) {
    std::vector<std::string> out;
    std::string token;
    for (char c : value) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            if (!token.empty()) out.push_back(token);
            token.clear();
        } else {
            token.push_back(c);
        }
    }
    if (!token.empty()) out.push_back(token);
    return out;
}

struct LoadedData {
    PointSet points;
    std::optional<BenchmarkInstance> instance;
};

LoadedData load_experiment_data(const ExperimentConfig& cfg) {
    if (cfg.dataset.rfind("benchmark:", 0) == 0) {
        std::size_t k = 0, alpha = 0;
        for (const auto& tok : tokenize(cfg.dataset.substr(10))) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos)
                throw std::runtime_error("bad benchmark spec: " + cfg.dataset);
            const std::string key = tok.substr(0, eq);
            const std::size_t val = std::stoul(tok.substr(eq + 1));
            if (key == "k")
                k = val;
            else if (key == "alpha")
                alpha = val;
            else
                throw std::runtime_error("bad benchmark spec key: " + key);
        }
        BenchmarkInstance inst = generate_benchmark(k, alpha);
        PointSet points = inst.as_point_set();
        return LoadedData{std::move(points), std::move(inst)};
    }
    PointSet points = load_dataset(cfg.dataset, cfg.format);
    if (!cfg.benchmark_meta.empty()) {
        BenchmarkInstance inst =
            load_benchmark_instance(cfg.dataset, cfg.benchmark_meta);
        return LoadedData{std::move(points), std::move(inst)};
    }
    return LoadedData{std::move(points), std::nullopt};
}

WeightedCoreset build_coreset(Algorithm algo, const PointSet& points,
                              std::size_t k, std::size_t m, std::uint64_t seed,
                              std::size_t raymaker_g) {
    const std::size_t T = std::min(m * k, points.size());
    switch (algo) {
        case Algorithm::sensitivity: {
            SamplingConfig cfg;
            cfg.k = k;
            cfg.coreset_size = T;
            cfg.seed = seed;
            return sensitivity_coreset(points, cfg);
        }
        case Algorithm::group: {
            GroupingConfig cfg;
            cfg.k = k;
            cfg.coreset_size = T;
            cfg.seed = seed;
            return group_coreset(points, cfg);
        }
        case Algorithm::streamkmpp:
            return streamkmpp_coreset(points, T, seed);
        case Algorithm::bico: {
            BicoConfig cfg;
            cfg.target_size = T;
            cfg.threshold_estimate_k = k;
            cfg.seed = seed;
            return bico_coreset(points, cfg);
        }
        case Algorithm::raymaker: {
            RayConfig cfg;
            cfg.k = k;
            cfg.per_ray_centers = raymaker_g;
            cfg.rays_per_center =
                std::max<std::size_t>(1, (T + k * raymaker_g - 1) / (k * raymaker_g));
            cfg.seed = seed;
            return raymaker_coreset(points, cfg);
        }
    }
    throw std::logic_error("build_coreset: unknown algorithm");
}

struct SummaryKey {
    std::string algorithm;
    std::size_t k;
    std::size_t m;
    bool operator<(const SummaryKey& o) const {
        if (algorithm != o.algorithm) return algorithm < o.algorithm;
        if (k != o.k) return k < o.k;
        return m < o.m;
    }
};

}  // namespace

std::string to_string(Algorithm a) {
    switch (a) {
        case Algorithm::sensitivity: return "sensitivity";
        case Algorithm::group: return "group";
        case Algorithm::streamkmpp: return "streamkmpp";
        case Algorithm::bico: return "bico";
        case Algorithm::raymaker: return "raymaker";
    }
    return "unknown";
}

Algorithm algorithm_from_string(const std::string& name) {
    if (name == "sensitivity") return Algorithm::sensitivity;
    if (name == "group") return Algorithm::group;
    if (name == "streamkmpp") return Algorithm::streamkmpp;
    if (name == "bico") return Algorithm::bico;
    if (name == "raymaker") return Algorithm::raymaker;
    throw std::runtime_error("unknown algorithm: " + name);
}

std::string Preprocessing::to_string() const {
    switch (kind) {
        case Kind::none: return "none";
        case Kind::pca: return "pca" + std::to_string(target_dim);
        case Kind::random: return "random" + std::to_string(target_dim);
    }
    return "none";
}

ExperimentConfig parse_experiment_config_text(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool have_seed = false;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (!tokenize(line).empty())
                throw std::runtime_error("config line " + std::to_string(lineno) +
                                         ": expected key = value");
            continue;
        }
        const auto key_tokens = tokenize(line.substr(0, eq));
        if (key_tokens.size() != 1)
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": expected a single key");
        const std::string& key = key_tokens[0];
        const auto values = tokenize(line.substr(eq + 1));
        auto require_one = [&]() -> const std::string& {
            if (values.size() != 1)
                throw std::runtime_error("config key '" + key +
                                         "' expects a single value");
            return values[0];
        };
        // Path-like values keep their raw (trimmed) spelling, commas and all.
        auto raw_value = [&]() {
            std::string v = line.substr(eq + 1);
            const auto begin = v.find_first_not_of(" \t");
            const auto end = v.find_last_not_of(" \t");
            if (begin == std::string::npos)
                throw std::runtime_error("config key '" + key + "' expects a value");
            return v.substr(begin, end - begin + 1);
        };
        if (key == "dataset") {
            cfg.dataset = raw_value();
        } else if (key == "format") {
            const std::string& v = require_one();
            if (v == "csv")
                cfg.format = DatasetFormat::csv_dense;
            else if (v == "svmlight")
                cfg.format = DatasetFormat::svmlight_sparse;
            else
                throw std::runtime_error("unknown format: " + v);
        } else if (key == "benchmark_meta") {
            cfg.benchmark_meta = raw_value();
        } else if (key == "preprocessing") {
            if (values.empty())
                throw std::runtime_error("preprocessing expects a value");
            if (values[0] == "none") {
                cfg.preprocessing = {};
            } else if (values[0] == "pca" || values[0] == "random") {
                if (values.size() != 2)
                    throw std::runtime_error("preprocessing " + values[0] +
                                             " expects a target dimension");
                cfg.preprocessing.kind = values[0] == "pca"
                                             ? Preprocessing::Kind::pca
                                             : Preprocessing::Kind::random;
                cfg.preprocessing.target_dim = std::stoul(values[1]);
            } else {
                throw std::runtime_error("unknown preprocessing: " + values[0]);
            }
        } else if (key == "algorithms") {
            cfg.algorithms.clear();
            for (const auto& v : values)
                cfg.algorithms.push_back(algorithm_from_string(v));
        } else if (key == "k") {
            cfg.k_values.clear();
            for (const auto& v : values) cfg.k_values.push_back(std::stoul(v));
        } else if (key == "m") {
            cfg.m_values.clear();
            for (const auto& v : values) cfg.m_values.push_back(std::stoul(v));
        } else if (key == "repetitions") {
            cfg.repetitions = std::stoul(require_one());
        } else if (key == "seed") {
            cfg.seed = std::stoull(require_one());
            have_seed = true;
        } else if (key == "output") {
            cfg.output_dir = raw_value();
        } else if (key == "threads") {
            cfg.threads = std::stoul(require_one());
        } else if (key == "candidates") {
            cfg.candidates_per_method = std::stoul(require_one());
        } else if (key == "methods") {
            cfg.methods.clear();
            for (const auto& v : values) {
                if (v == "kmeanspp")
                    cfg.methods.push_back(CandidateMethod::kmeanspp);
                else if (v == "convex_hull")
                    cfg.methods.push_back(CandidateMethod::convex_hull);
                else if (v == "meb")
                    cfg.methods.push_back(CandidateMethod::meb);
                else
                    throw std::runtime_error("unknown candidate method: " + v);
            }
        } else if (key == "raymaker_g") {
            cfg.raymaker_g = std::stoul(require_one());
        } else if (key == "record_timeout_s") {
            cfg.record_timeout_s = std::stod(require_one());
        } else {
            throw std::runtime_error("unknown config key: " + key);
        }
    }
    if (cfg.dataset.empty())
        throw std::runtime_error("config: dataset is required");
    if (cfg.algorithms.empty())
        throw std::runtime_error("config: algorithms is required");
    if (cfg.k_values.empty() || cfg.m_values.empty())
        throw std::runtime_error("config: k and m are required");
    if (cfg.repetitions == 0)
        throw std::runtime_error("config: repetitions must be >= 1");
    if (!have_seed) throw std::runtime_error("config: seed is required");
    return cfg;
}

ExperimentConfig parse_experiment_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_experiment_config_text(buffer.str());
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    LoadedData data = load_experiment_data(cfg);

    // Preprocess once; a benchmark instance keeps its planted labels and is
    // evaluated in the projected space.
    std::optional<ProjectionModel> model;
    if (cfg.preprocessing.kind != Preprocessing::Kind::none) {
        if (cfg.preprocessing.kind == Preprocessing::Kind::pca) {
            model = fit_pca(data.points, cfg.preprocessing.target_dim, 4,
                            mix_seed(cfg.seed, 0x9caULL));
        } else {
            model = fit_random_projection(data.points.dim(),
                                          cfg.preprocessing.target_dim,
                                          mix_seed(cfg.seed, 0x9caULL));
        }
        data.points = project(data.points, *model);
        if (data.instance) {
            data.instance->matrix = data.points.matrix();
        }
    }

    struct Cell {
        Algorithm algorithm;
        std::size_t k, m, repetition;
    };
    std::vector<Cell> cells;
    for (Algorithm algo : cfg.algorithms)
        for (std::size_t k : cfg.k_values)
            for (std::size_t m : cfg.m_values)
                for (std::size_t rep = 0; rep < cfg.repetitions; ++rep)
                    cells.push_back({algo, k, m, rep});

    std::vector<ExperimentRecord> records(cells.size());
    std::atomic<std::size_t> next{0};
    const std::size_t worker_count = std::max<std::size_t>(
        1, std::min<std::size_t>(
               cfg.threads ? cfg.threads : std::thread::hardware_concurrency(),
               cells.size()));

    auto run_cell = [&](std::size_t idx) {
        const Cell& cell = cells[idx];
        ExperimentRecord rec;
        rec.dataset = cfg.dataset;
        rec.algorithm = cell.algorithm;
        rec.preprocessing = cfg.preprocessing.to_string();
        rec.k = cell.k;
        rec.m = cell.m;
        rec.repetition = cell.repetition;
        rec.seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(cell.algorithm),
                            cell.k * 1000003ULL + cell.m, cell.repetition);
        rec.distortion_kmeanspp = kNaN;
        rec.distortion_convex_hull = kNaN;
        rec.distortion_meb = kNaN;
        try {
            const auto t0 = std::chrono::steady_clock::now();
            const WeightedCoreset coreset =
                build_coreset(cell.algorithm, data.points, cell.k, cell.m,
                              rec.seed, cfg.raymaker_g);
            rec.construction_seconds = seconds_since(t0);
            if (cfg.record_timeout_s > 0.0 &&
                rec.construction_seconds > cfg.record_timeout_s)
                throw std::runtime_error("record timeout exceeded");

            EvalConfig eval_cfg;
            eval_cfg.candidates_per_method = cfg.candidates_per_method;
            eval_cfg.methods = cfg.methods;
            eval_cfg.seed = rec.seed;

            const auto t1 = std::chrono::steady_clock::now();
            DistortionReport report;
            if (data.instance) {
                report = evaluate_benchmark(*data.instance, coreset, eval_cfg);
            } else {
                report = evaluate_real(data.points, coreset, cell.k, eval_cfg);
                rec.distortion_kmeanspp = report.method_max("kmeanspp");
                rec.distortion_convex_hull = report.method_max("convex_hull");
                rec.distortion_meb = report.method_max("meb");
            }
            rec.distortion_max = report.max_distortion;
            rec.eval_seconds = seconds_since(t1);

            // Optimize on the coreset, score on the full data.
            const PointSet coreset_points = coreset.as_point_set();
            SeedConfig seed_cfg;
            seed_cfg.k = std::min(cell.k, coreset_points.size());
            Rng opt_rng(mix_seed(rec.seed, 0x10edULL));
            const CenterSet init = kmeanspp_seed(coreset_points, seed_cfg, opt_rng);
            const LloydResult opt = lloyd(coreset_points, init, 100, 1e-7);
            rec.optimized_cost = clustering_cost(data.points, opt.centers);
        } catch (const std::exception& e) {
            std::string msg = e.what();
            for (char& c : msg)
                if (c == ',' || c == '\n') c = ';';
            rec.error = msg;
        }
        records[idx] = std::move(rec);
    };

    if (worker_count == 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(worker_count);
        for (std::size_t w = 0; w < worker_count; ++w) {
            workers.emplace_back([&]() {
                for (;;) {
                    const std::size_t idx = next.fetch_add(1);
                    if (idx >= cells.size()) return;
                    run_cell(idx);
                }
            });
        }
        for (auto& t : workers) t.join();
    }

    // Records are already in canonical (algorithm, k, m, repetition) order.
    ExperimentResult result;
    std::ostringstream rec_csv;
    rec_csv << "dataset,algorithm,preprocessing,k,m,repetition,seed,"
               "distortion_max,distortion_kmeanspp,distortion_convex_hull,"
               "distortion_meb,optimized_cost,construction_time_s,eval_time_s,"
               "error\n";
    for (const auto& r : records) {
        rec_csv << csv_field(r.dataset) << ',' << to_string(r.algorithm) << ','
                << r.preprocessing << ',' << r.k << ',' << r.m << ','
                << r.repetition << ',' << r.seed << ',' << fmt(r.distortion_max)
                << ',' << fmt(r.distortion_kmeanspp) << ','
                << fmt(r.distortion_convex_hull) << ',' << fmt(r.distortion_meb)
                << ',' << fmt(r.optimized_cost) << ','
                << fmt(r.construction_seconds) << ',' << fmt(r.eval_seconds)
                << ',' << r.error << '\n';
    }

    // Summary: mean/std per (algorithm, k, m) over clean records.
    std::map<SummaryKey, std::vector<const ExperimentRecord*>> groups;
    for (const auto& r : records)
        if (r.error.empty())
            groups[{to_string(r.algorithm), r.k, r.m}].push_back(&r);
    std::ostringstream sum_csv;
    sum_csv << "dataset,algorithm,preprocessing,k,m,repetitions,"
               "distortion_mean,distortion_std,cost_mean,cost_std,"
               "construction_time_mean_s\n";
    for (const auto& [key, rows] : groups) {
        const double count = static_cast<double>(rows.size());
        double dist_mean = 0.0, cost_mean = 0.0, time_mean = 0.0;
        for (const auto* r : rows) {
            dist_mean += r->distortion_max;
            cost_mean += r->optimized_cost;
            time_mean += r->construction_seconds;
        }
        dist_mean /= count;
        cost_mean /= count;
        time_mean /= count;
        double dist_var = 0.0, cost_var = 0.0;
        if (rows.size() > 1) {
            for (const auto* r : rows) {
                dist_var += (r->distortion_max - dist_mean) *
                            (r->distortion_max - dist_mean);
                cost_var +=
                    (r->optimized_cost - cost_mean) * (r->optimized_cost - cost_mean);
            }
            dist_var /= count - 1.0;
            cost_var /= count - 1.0;
        }
        sum_csv << csv_field(cfg.dataset) << ',' << key.algorithm << ','
                << cfg.preprocessing.to_string() << ',' << key.k << ',' << key.m
                << ',' << rows.size() << ',' << fmt(dist_mean) << ','
                << fmt(std::sqrt(dist_var)) << ',' << fmt(cost_mean) << ','
                << fmt(std::sqrt(cost_var)) << ',' << fmt(time_mean) << '\n';
    }

    result.records = std::move(records);
    result.records_csv = rec_csv.str();
    result.summary_csv = sum_csv.str();

    if (!cfg.output_dir.empty()) {
        std::filesystem::create_directories(cfg.output_dir);
        const auto dir = std::filesystem::path(cfg.output_dir);
        std::ofstream(dir / "records.csv") << result.records_csv;
        std::ofstream(dir / "summary.csv") << result.summary_csv;
        if (model) save_projection_model((dir / "projection.json").string(), *model);
    }
    return result;
}

std::vector<CostCurvePoint> cost_curve(const PointSet& points,
                                       std::vector<std::size_t> k_values,
                                       std::size_t seeds, std::uint64_t seed) {
    if (k_values.empty())
        throw std::invalid_argument("cost_curve: k list must be nonempty");
    if (seeds == 0) throw std::invalid_argument("cost_curve: seeds must be >= 1");
    std::sort(k_values.begin(), k_values.end());
    k_values.erase(std::unique(k_values.begin(), k_values.end()), k_values.end());

    std::vector<double> best(k_values.size(),
                             std::numeric_limits<double>::infinity());
    for (std::size_t s = 0; s < seeds; ++s) {
        Rng rng(mix_seed(seed, 0xcc, s));
        Matrix centers(0, points.dim());
        std::vector<double> sq_dists(points.size(),
                                     std::numeric_limits<double>::infinity());
        std::vector<double> masses(points.size());
        auto add_center = [&](std::span<const double> c) {
            centers.data.insert(centers.data.end(), c.begin(), c.end());
            centers.rows += 1;
            for (std::size_t i = 0; i < points.size(); ++i) {
                const double d = squared_distance(points.point(i), c);
                if (d < sq_dists[i]) sq_dists[i] = d;
            }
        };
        for (std::size_t t = 0; t < k_values.size(); ++t) {
            // Extend the current solution to k_values[t] centers by D^2
            // sampling, then refine with Lloyd. Supersets never cost more,
            // so each per-seed curve is monotone.
            while (centers.rows < k_values[t]) {
                double total = 0.0;
                for (std::size_t i = 0; i < points.size(); ++i) {
                    masses[i] = points.weight(i) * sq_dists[i];
                    total += masses[i];
                }
                const std::size_t pick = total > 0.0
                                             ? sample_discrete(rng, masses, total)
                                             : rng.index(points.size());
                add_center(points.point(pick));
            }
            const LloydResult res = lloyd(points, CenterSet(centers), 100, 1e-7);
            if (res.cost < best[t]) best[t] = res.cost;
            centers = res.centers.matrix();
            // Refresh distances against the refined centers.
            std::fill(sq_dists.begin(), sq_dists.end(),
                      std::numeric_limits<double>::infinity());
            for (std::size_t c = 0; c < centers.rows; ++c) {
                for (std::size_t i = 0; i < points.size(); ++i) {
                    const double d =
                        squared_distance(points.point(i), centers.row(c));
                    if (d < sq_dists[i]) sq_dists[i] = d;
                }
            }
        }
    }
    std::vector<CostCurvePoint> out(k_values.size());
    for (std::size_t t = 0; t < k_values.size(); ++t)
        out[t] = {k_values[t], best[t]};
    return out;
}

std::string cost_curve_csv(const std::vector<CostCurvePoint>& curve) {
    std::ostringstream out;
    out << "k,cost\n";
    for (const auto& p : curve) out << p.k << ',' << fmt(p.cost) << '\n';
    return out.str();
}

}  // namespace coresets
