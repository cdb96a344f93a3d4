#include "krigmean/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "krigmean/asymptotics.hpp"
#include "krigmean/estimators.hpp"
#include "krigmean/svg.hpp"

namespace krigmean {

namespace {

std::string g12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string csv_safe(std::string s) {
    std::replace(s.begin(), s.end(), ',', ';');
    std::replace(s.begin(), s.end(), '\n', ' ');
    std::replace(s.begin(), s.end(), '\r', ' ');
    return s;
}

CorrelationModel model_from(const ExperimentConfig& config, double t) {
    if (config.model == "white-noise")
        return CorrelationModel::white_noise();
    return CorrelationModel::negative_power(t, config.beta);
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary); // '\n' endings on every platform
    if (!out)
        throw IoError("cannot open output file: " + path.string());
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    auto out = open_out(path);
    out << content;
    if (!out)
        throw IoError("failed writing " + path.string());
}

std::filesystem::path ensure_dir(const ExperimentConfig& config) {
    std::filesystem::create_directories(config.output_dir);
    return config.output_dir;
}

RootOptions root_options(const ExperimentConfig& config) {
    RootOptions opts;
    opts.j_lo = static_cast<double>(config.n) + 1.0;
    opts.j_hi = config.j_max;
    opts.integer_only = config.integer_j_only;
    return opts;
}

} // namespace

void ExperimentConfig::validate() const {
    if (n < 1)
        throw InvalidParameterError("config: n must be >= 1");
    if (!(t_start <= t_end))
        throw InvalidParameterError("config: t_start must be <= t_end");
    if (!(j_max >= static_cast<double>(n) + 1.0))
        throw InvalidParameterError("config: j_max must be >= n+1");
    if (!(sigma2 > 0.0))
        throw InvalidParameterError("config: sigma2 must be positive");
    if (!(beta > 0.0))
        throw InvalidParameterError("config: beta must be positive");
    if (model != "negative-power" && model != "white-noise")
        throw InvalidParameterError("config: model must be negative-power or white-noise");
}

std::string ExperimentConfig::canonical_string() const {
    std::ostringstream s;
    s << "beta=" << g12(beta) << ";integer_j=" << (integer_j_only ? 1 : 0)
      << ";j_max=" << g12(j_max) << ";model=" << model << ";n=" << n
      << ";sigma2=" << g12(sigma2) << ";t_end=" << g12(t_end) << ";t_start=" << g12(t_start);
    return s.str();
}

std::vector<double> ExperimentConfig::t_grid() const {
    std::vector<double> ts;
    for (double t = t_start; t <= t_end + 1e-9; t += 1.0)
        ts.push_back(t);
    return ts;
}

std::uint64_t config_hash(const ExperimentConfig& config, const std::string& input_source) {
    const std::string text = config.canonical_string() + "|input=" + input_source;
    std::uint64_t h = 1469598103934665603ull; // FNV-1a 64
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hash_hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

CommandResult cmd_variance_curve(const ExperimentConfig& config, const Series& series) {
    config.validate();
    const std::string hash = hash_hex(config_hash(config, series.source));
    const auto dir = ensure_dir(config);

    const CorrelationModel prototype = model_from(config, config.t_start);
    const auto entries = sweep(prototype, config.n, series, config.t_grid(), root_options(config));

    std::ostringstream csv;
    csv << "t,j_star,statistic_variance,residual,bracketed,error,config\n";
    std::vector<svg::Point> curve;
    for (const auto& e : entries) {
        if (e.result) {
            const auto& r = *e.result;
            csv << g12(e.t) << "," << g12(r.j_star) << "," << g12(r.statistic_variance * config.sigma2)
                << "," << g12(r.residual) << "," << (r.bracketed ? "true" : "false") << ",," << hash
                << "\n";
            curve.push_back({e.t, r.statistic_variance * config.sigma2});
        } else {
            csv << g12(e.t) << ",,,,," << csv_safe(e.error) << "," << hash << "\n";
        }
    }

    CommandResult res;
    res.csv_path = dir / "variance_curve.csv";
    res.data_rows = entries.size();
    write_file(res.csv_path, csv.str());

    if (config.svg) {
        svg::Chart chart("Estimator variance at the constraint root", "t",
                         "variance (units of sigma^2)");
        chart.add_line(curve, "#000000");
        res.svg_path = dir / "variance_curve.svg";
        write_file(*res.svg_path, chart.render());
    }
    return res;
}

CommandResult cmd_compare(const ExperimentConfig& config, const Series& series) {
    config.validate();
    const std::string hash = hash_hex(config_hash(config, series.source));
    const auto dir = ensure_dir(config);

    const CorrelationModel prototype = model_from(config, config.t_start);
    const ClassicSolution cls = classic(build_matrix(prototype, config.n), series);
    const auto entries = sweep(prototype, config.n, series, config.t_grid(), root_options(config));

    std::ostringstream csv;
    csv << "kind,t,j_star,estimate,abs_diff_classic,error,config\n";
    csv << "classic,,," << g12(cls.estimate) << ",0,," << hash << "\n";
    std::vector<svg::Point> dots;
    std::size_t rows = 1;
    for (const auto& e : entries) {
        ++rows;
        if (e.result) {
            const auto& r = *e.result;
            csv << "numerical," << g12(e.t) << "," << g12(r.j_star) << "," << g12(r.estimate) << ","
                << g12(std::abs(r.estimate - cls.estimate)) << ",," << hash << "\n";
            dots.push_back({r.j_star, r.estimate});
        } else {
            csv << "numerical," << g12(e.t) << ",,,," << csv_safe(e.error) << "," << hash << "\n";
        }
    }

    CommandResult res;
    res.csv_path = dir / "compare.csv";
    res.data_rows = rows;
    write_file(res.csv_path, csv.str());

    if (config.svg) {
        svg::Chart chart("Numerical estimates at j* vs the classic estimate", "j", "estimate");
        chart.add_hline(cls.estimate, "#888888");
        chart.add_vline(static_cast<double>(config.n), "#555555", /*dashed=*/true);
        chart.add_points(dots, "#000000");
        res.svg_path = dir / "compare.svg";
        write_file(*res.svg_path, chart.render());
    }
    return res;
}

CommandResult cmd_classic(const ExperimentConfig& config, const Series& series) {
    config.validate();
    const std::string hash = hash_hex(config_hash(config, series.source));
    const auto dir = ensure_dir(config);

    const CorrelationModel model = model_from(config, config.t_start);
    const ClassicSolution cls = classic(build_matrix(model, config.n), series);

    std::ostringstream csv;
    csv << "n,estimate,xi,fxf,statistic_variance,config\n";
    csv << config.n << "," << g12(cls.estimate) << "," << g12(cls.xi) << "," << g12(cls.fxf) << ","
        << g12(cls.statistic_variance * config.sigma2) << "," << hash << "\n";

    CommandResult res;
    res.csv_path = dir / "classic.csv";
    res.data_rows = 1;
    write_file(res.csv_path, csv.str());
    return res;
}

CommandResult cmd_asymptotics(const ExperimentConfig& config, std::vector<int> n_ladder) {
    config.validate();
    if (n_ladder.empty())
        n_ladder = {10, 20, 40, 80, 160};

    std::ostringstream ladder_text;
    for (std::size_t k = 0; k < n_ladder.size(); ++k)
        ladder_text << (k ? "," : "") << n_ladder[k];
    const std::string hash =
        hash_hex(config_hash(config, "ladder=" + ladder_text.str()));
    const auto dir = ensure_dir(config);

    const CorrelationModel model = model_from(config, config.t_start);
    const AsymptoticReport rep = decay_study(model, n_ladder);

    std::ostringstream csv;
    csv << "n,fxf_inv,xi,mu_limit,statistic_variance_limit,prediction_variance_limit,"
           "abs_fxf_inv_decreasing,config\n";
    for (std::size_t k = 0; k < rep.n_values.size(); ++k) {
        csv << rep.n_values[k] << "," << g12(rep.fxf_inv[k]) << "," << g12(rep.xi[k]) << ","
            << g12(rep.mu_limit[k]) << "," << g12(rep.statistic_variance_limit[k] * config.sigma2)
            << "," << g12(rep.prediction_variance_limit[k] * config.sigma2) << ","
            << (rep.abs_fxf_inv_decreasing ? "true" : "false") << "," << hash << "\n";
    }

    CommandResult res;
    res.csv_path = dir / "asymptotics.csv";
    res.data_rows = rep.n_values.size();
    write_file(res.csv_path, csv.str());
    return res;
}

CommandResult cmd_scan(const ExperimentConfig& config, const Series& series) {
    config.validate();
    const std::string hash = hash_hex(config_hash(config, series.source));
    const auto dir = ensure_dir(config);

    const CorrelationModel model = model_from(config, config.t_start);
    std::vector<double> grid;
    for (double j = static_cast<double>(config.n) + 1.0; j <= config.j_max + 1e-9; j += 1.0)
        grid.push_back(j);

    const auto points = scan_residual(model, config.n, series, grid);

    std::ostringstream csv;
    csv << "j,residual,estimate,statistic_variance,config\n";
    for (const auto& p : points)
        csv << g12(p.j) << "," << g12(p.residual) << "," << g12(p.estimate) << ","
            << g12(p.statistic_variance * config.sigma2) << "," << hash << "\n";

    CommandResult res;
    res.csv_path = dir / "scan.csv";
    res.data_rows = points.size();
    write_file(res.csv_path, csv.str());
    return res;
}

} // namespace krigmean
