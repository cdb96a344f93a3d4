// Command-line driver: constrained-kriging estimation of a constant mean,
// figure-ready CSV/SVG outputs.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "krigmean/commands.hpp"
#include "krigmean/errors.hpp"
#include "krigmean/series.hpp"

namespace {

struct CliOptions {
    krigmean::ExperimentConfig config;
    std::string input;
    std::string column = "0";
    std::string out_dir = "out";
    std::vector<int> ladder;
    std::uint32_t demo_seed = krigmean::kDemoSeed;
    std::size_t demo_count = 600;
};

krigmean::Series load_series(const CliOptions& opts) {
    if (opts.input.empty())
        return krigmean::make_demo_series();
    return krigmean::ingest(opts.input, opts.column);
}

void report(const krigmean::CommandResult& res) {
    std::cout << "wrote " << res.csv_path.string() << " (" << res.data_rows << " data rows)\n";
    if (res.svg_path)
        std::cout << "wrote " << res.svg_path->string() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constant-mean estimation for correlated samples: classic GLS and the "
                 "constrained numerical estimator"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "Read options from a flat key=value file");

    CliOptions opts;
    app.add_option("--input", opts.input, "Input CSV (defaults to the bundled demo series)");
    app.add_option("--column", opts.column, "CSV column: 0-based index or header name")
        ->capture_default_str();
    app.add_option("--n", opts.config.n, "Sample size")->capture_default_str();
    app.add_option("--t-start", opts.config.t_start, "First correlation parameter t")
        ->capture_default_str();
    app.add_option("--t-end", opts.config.t_end, "Last correlation parameter t (step 1)")
        ->capture_default_str();
    app.add_option("--beta", opts.config.beta, "Exponent of the negative-power model")
        ->capture_default_str();
    app.add_option("--j-max", opts.config.j_max, "Upper bound of the j scan")
        ->capture_default_str();
    app.add_option("--sigma2", opts.config.sigma2, "Field variance applied to variance columns")
        ->capture_default_str();
    app.add_flag("--integer-j", opts.config.integer_j_only,
                 "Restrict the root search to integer j");
    app.add_option("--model", opts.config.model, "Correlation model: negative-power|white-noise")
        ->capture_default_str();
    app.add_option("--out", opts.out_dir, "Output directory")->capture_default_str();
    app.add_flag("--svg", opts.config.svg, "Also render an SVG figure");

    auto* variance = app.add_subcommand("variance-curve",
                                        "Variance of the numerical estimator per t (one row each)");
    auto* compare = app.add_subcommand("compare",
                                       "Classic estimate vs numerical estimates at their j*");
    auto* classic_cmd = app.add_subcommand("classic", "Classic generalized least-squares estimate");
    auto* asymptotics = app.add_subcommand("asymptotics", "Limit identities over a ladder of n");
    asymptotics->add_option("--n-ladder", opts.ladder, "Sample sizes (default 10 20 40 80 160)");
    auto* scan = app.add_subcommand("scan", "Residual dump over integer j for t = --t-start");
    auto* demo = app.add_subcommand("make-demo", "Write the bundled demo series as CSV");
    demo->add_option("--seed", opts.demo_seed, "Generator seed")->capture_default_str();
    demo->add_option("--count", opts.demo_count, "Number of values")->capture_default_str();

    CLI11_PARSE(app, argc, argv);
    opts.config.output_dir = opts.out_dir;

    try {
        if (variance->parsed()) {
            report(krigmean::cmd_variance_curve(opts.config, load_series(opts)));
        } else if (compare->parsed()) {
            report(krigmean::cmd_compare(opts.config, load_series(opts)));
        } else if (classic_cmd->parsed()) {
            report(krigmean::cmd_classic(opts.config, load_series(opts)));
        } else if (asymptotics->parsed()) {
            report(krigmean::cmd_asymptotics(opts.config, opts.ladder));
        } else if (scan->parsed()) {
            report(krigmean::cmd_scan(opts.config, load_series(opts)));
        } else if (demo->parsed()) {
            const auto series = krigmean::make_demo_series(opts.demo_seed, opts.demo_count);
            std::filesystem::create_directories(opts.out_dir);
            const auto path = std::filesystem::path(opts.out_dir) / "demo_series.csv";
            std::ofstream out(path, std::ios::binary);
            if (!out)
                throw krigmean::IoError("cannot open " + path.string());
            out << "close\n";
            for (double v : series.values) {
                char buf[40];
                std::snprintf(buf, sizeof buf, "%.12g", v);
                out << buf << "\n";
            }
            std::cout << "wrote " << path.string() << " (" << series.values.size()
                      << " rows, source " << series.source << ")\n";
        }
    } catch (const krigmean::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
