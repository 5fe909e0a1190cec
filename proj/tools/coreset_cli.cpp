// Command line front end: benchmark generation, coreset construction,
// distortion evaluation, experiment runs and cost curves.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coresets/bico.hpp"
#include "coresets/benchmark_gen.hpp"
#include "coresets/dataset_io.hpp"
#include "coresets/dimred.hpp"
#include "coresets/evaluation.hpp"
#include "coresets/experiment.hpp"
#include "coresets/geometry.hpp"
#include "coresets/group_sampling.hpp"
#include "coresets/ray_maker.hpp"
#include "coresets/sensitivity_sampling.hpp"
#include "coresets/stream_kmpp.hpp"

namespace {

using namespace coresets;

DatasetFormat parse_format(const std::string& name) {
    if (name == "csv") return DatasetFormat::csv_dense;
    if (name == "svmlight") return DatasetFormat::svmlight_sparse;
    throw CLI::ValidationError("--format", "expected csv or svmlight");
}

CompositeSpec parse_composite(const std::string& spec) {
    CompositeSpec out;
    std::string token;
    std::istringstream ss(spec);
    while (std::getline(ss, token, ',')) {
        const auto colon = token.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--composite", "expected k:alpha[,k:alpha...]");
        CompositeSpec::Block block;
        block.k = std::stoul(token.substr(0, colon));
        block.alpha = std::stoul(token.substr(colon + 1));
        out.blocks.push_back(block);
    }
    return out;
}

int cmd_gen_benchmark(std::size_t k, std::size_t alpha,
                      const std::string& composite, double offset_scale,
                      const std::string& out_path) {
    if (!composite.empty()) {
        CompositeSpec spec = parse_composite(composite);
        if (offset_scale > 0.0) spec.offset_scale = offset_scale;
        const PointSet points = composite_benchmark(spec);
        save_dataset_csv(out_path, points.matrix());
        std::printf("wrote %zu x %zu composite benchmark to %s\n", points.size(),
                    points.dim(), out_path.c_str());
        return 0;
    }
    const BenchmarkInstance inst = generate_benchmark(k, alpha);
    save_dataset_csv(out_path, inst.matrix);
    const std::string meta_path = out_path + ".meta";
    save_benchmark_metadata(meta_path, inst);
    std::printf("wrote %zu x %zu benchmark to %s (metadata: %s)\n", inst.size(),
                inst.dim(), out_path.c_str(), meta_path.c_str());
    return 0;
}

int cmd_build_coreset(const std::string& algo, const std::string& dataset,
                      const std::string& format, std::size_t k, std::size_t m,
                      std::uint64_t seed, std::size_t raymaker_g,
                      const std::string& out_path) {
    const PointSet points = load_dataset(dataset, parse_format(format));
    const std::size_t T = std::min(m * k, points.size());
    WeightedCoreset coreset = [&]() {
        const Algorithm a = algorithm_from_string(algo);
        switch (a) {
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
                cfg.rays_per_center = std::max<std::size_t>(
                    1, (T + k * raymaker_g - 1) / (k * raymaker_g));
                cfg.seed = seed;
                return raymaker_coreset(points, cfg);
            }
        }
        throw std::logic_error("unreachable");
    }();
    save_coreset_csv(out_path, coreset);
    std::printf("wrote %zu-point %s coreset (total weight %.6f) to %s\n",
                coreset.size(), algo.c_str(), coreset.total_weight(),
                out_path.c_str());
    return 0;
}

int cmd_evaluate(const std::string& coreset_path, const std::string& dataset,
                 const std::string& format, const std::string& meta,
                 std::size_t k, std::uint64_t seed, std::size_t candidates,
                 bool candidates_on_input) {
    const WeightedCoreset coreset = load_coreset_csv(coreset_path);
    EvalConfig cfg;
    cfg.candidates_per_method = candidates;
    cfg.seed = seed;
    cfg.candidates_on_input = candidates_on_input;

    DistortionReport report;
    if (!meta.empty()) {
        const BenchmarkInstance inst = load_benchmark_instance(dataset, meta);
        report = evaluate_benchmark(inst, coreset, cfg);
    } else {
        const PointSet points = load_dataset(dataset, parse_format(format));
        report = evaluate_real(points, coreset, k, cfg);
    }
    for (const auto& c : report.candidates)
        std::printf("%-28s %.6f\n", c.label.c_str(), c.distortion);
    std::printf("max distortion: %.6f (%s)\n", report.max_distortion,
                report.max_label.c_str());
    return report.degenerate ? 2 : 0;
}

int cmd_experiment(const std::string& config_path) {
    const ExperimentConfig cfg = parse_experiment_config(config_path);
    const ExperimentResult result = run_experiment(cfg);
    std::size_t failures = 0;
    for (const auto& r : result.records)
        if (!r.error.empty()) ++failures;
    std::printf("%zu records (%zu failed)\n", result.records.size(), failures);
    if (cfg.output_dir.empty()) {
        std::fputs(result.summary_csv.c_str(), stdout);
    } else {
        std::printf("results under %s\n", cfg.output_dir.c_str());
    }
    return 0;
}

int cmd_cost_curve(const std::string& dataset, const std::string& format,
                   const std::vector<std::size_t>& k_values, std::size_t seeds,
                   std::uint64_t seed, const std::string& out_path) {
    const PointSet points = load_dataset(dataset, parse_format(format));
    const auto curve = cost_curve(points, k_values, seeds, seed);
    const std::string csv = cost_curve_csv(curve);
    if (out_path.empty()) {
        std::fputs(csv.c_str(), stdout);
    } else {
        std::ofstream(out_path) << csv;
        std::printf("wrote cost curve to %s\n", out_path.c_str());
    }
    return 0;
}

int cmd_project(const std::string& dataset, const std::string& format,
                const std::string& kind, std::size_t r, std::uint64_t seed,
                const std::string& out_path, const std::string& model_path) {
    const PointSet points = load_dataset(dataset, parse_format(format));
    ProjectionModel model;
    if (kind == "pca") {
        model = fit_pca(points, r, 4, seed);
    } else if (kind == "random") {
        model = fit_random_projection(points.dim(), r, seed);
    } else {
        throw CLI::ValidationError("--kind", "expected pca or random");
    }
    const PointSet projected = project(points, model);
    save_dataset_csv(out_path, projected.matrix());
    if (!model_path.empty()) save_projection_model(model_path, model);
    if (model.kind == ProjectionKind::pca) {
        double captured = 0.0;
        for (double v : model.variances) captured += v;
        std::printf("captured variance: %.17g of %.17g total\n", captured,
                    total_variance(points));
    }
    std::printf("wrote %zu x %zu projection to %s\n", projected.size(),
                projected.dim(), out_path.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-means coreset construction and distortion evaluation"};
    app.require_subcommand(1);

    // gen-benchmark
    std::size_t gb_k = 10, gb_alpha = 3;
    std::string gb_composite, gb_out = "benchmark.csv";
    double gb_offset = 0.0;
    auto* gen = app.add_subcommand("gen-benchmark",
                                   "Generate an adversarial benchmark instance");
    gen->add_option("--k", gb_k, "Clusters per planted solution");
    gen->add_option("--alpha", gb_alpha, "Number of planted solutions");
    gen->add_option("--composite", gb_composite,
                    "Composite blocks as k:alpha[,k:alpha...]");
    gen->add_option("--offset-scale", gb_offset,
                    "Composite block offset (default: 10 x block diameter)");
    gen->add_option("--out", gb_out, "Output csv path");

    // build-coreset
    std::string bc_algo, bc_dataset, bc_format = "csv", bc_out = "coreset.csv";
    std::size_t bc_k = 10, bc_m = 200, bc_g = 8;
    std::uint64_t bc_seed = 0;
    auto* build = app.add_subcommand("build-coreset", "Construct a coreset");
    build->add_option("--algo", bc_algo,
                      "sensitivity|group|streamkmpp|bico|raymaker")
        ->required();
    build->add_option("--dataset", bc_dataset, "Input dataset")->required();
    build->add_option("--format", bc_format, "csv|svmlight");
    build->add_option("--k", bc_k, "Target cluster count");
    build->add_option("--m", bc_m, "Size multiplier (T = m*k)");
    build->add_option("--seed", bc_seed, "Random seed")->required();
    build->add_option("--raymaker-g", bc_g, "Ray Maker 1D clusters per ray");
    build->add_option("--out", bc_out, "Output coreset csv");

    // evaluate
    std::string ev_coreset, ev_dataset, ev_format = "csv", ev_meta;
    std::size_t ev_k = 10, ev_candidates = 5;
    std::uint64_t ev_seed = 0;
    bool ev_on_input = false;
    auto* eval = app.add_subcommand("evaluate", "Estimate coreset distortion");
    eval->add_option("--coreset", ev_coreset, "Coreset csv")->required();
    eval->add_option("--dataset", ev_dataset, "Original dataset")->required();
    eval->add_option("--format", ev_format, "csv|svmlight");
    eval->add_option("--benchmark-meta", ev_meta,
                     "Benchmark sidecar; selects the deficiency evaluator");
    eval->add_option("--k", ev_k, "Candidate solution size");
    eval->add_option("--seed", ev_seed, "Random seed")->required();
    eval->add_option("--candidates", ev_candidates, "Candidates per method");
    eval->add_flag("--candidates-on-input", ev_on_input,
                   "Sample candidates from the data instead of the coreset");

    // experiment
    std::string ex_config;
    auto* exp = app.add_subcommand("experiment", "Run a configured experiment");
    exp->add_option("--config", ex_config, "Config file")->required();

    // cost-curve
    std::string cc_dataset, cc_format = "csv", cc_out;
    std::vector<std::size_t> cc_k;
    std::size_t cc_seeds = 3;
    std::uint64_t cc_seed = 0;
    auto* curve = app.add_subcommand("cost-curve",
                                     "Best-of-seeds Lloyd cost per center count");
    curve->add_option("--dataset", cc_dataset, "Input dataset")->required();
    curve->add_option("--format", cc_format, "csv|svmlight");
    curve->add_option("--k-list", cc_k, "Center counts")->required();
    curve->add_option("--seeds", cc_seeds, "Seeding restarts");
    curve->add_option("--seed", cc_seed, "Random seed")->required();
    curve->add_option("--out", cc_out, "Output csv (stdout if omitted)");

    // project
    std::string pr_dataset, pr_format = "csv", pr_kind = "pca";
    std::string pr_out = "projected.csv", pr_model;
    std::size_t pr_r = 10;
    std::uint64_t pr_seed = 0;
    auto* proj = app.add_subcommand("project", "Dimension-reduce a dataset");
    proj->add_option("--dataset", pr_dataset, "Input dataset")->required();
    proj->add_option("--format", pr_format, "csv|svmlight");
    proj->add_option("--kind", pr_kind, "pca|random");
    proj->add_option("--r", pr_r, "Target dimension");
    proj->add_option("--seed", pr_seed, "Random seed")->required();
    proj->add_option("--out", pr_out, "Projected dataset csv");
    proj->add_option("--model", pr_model, "Where to store the projection model");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_gen_benchmark(gb_k, gb_alpha, gb_composite, gb_offset, gb_out);
        if (build->parsed())
            return cmd_build_coreset(bc_algo, bc_dataset, bc_format, bc_k, bc_m,
                                     bc_seed, bc_g, bc_out);
        if (eval->parsed())
            return cmd_evaluate(ev_coreset, ev_dataset, ev_format, ev_meta, ev_k,
                                ev_seed, ev_candidates, ev_on_input);
        if (exp->parsed()) return cmd_experiment(ex_config);
        if (curve->parsed())
            return cmd_cost_curve(cc_dataset, cc_format, cc_k, cc_seeds, cc_seed,
                                  cc_out);
        if (proj->parsed())
            return cmd_project(pr_dataset, pr_format, pr_kind, pr_r, pr_seed,
                               pr_out, pr_model);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
