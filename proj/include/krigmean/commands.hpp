#ifndef KRIGMEAN_COMMANDS_HPP
#define KRIGMEAN_COMMANDS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "krigmean/corr.hpp"
#include "krigmean/series.hpp"

namespace krigmean {

// Experiment parameters shared by every subcommand. Defaults reproduce the
// reference experiment scale: n = 182 samples, 139 correlation parameters
// t = 183..321, candidate prediction indices up to j = 600.
struct ExperimentConfig {
    int n = 182;
    double t_start = 183.0;
    double t_end = 321.0;
    double beta = kDefaultBeta;
    double j_max = 600.0;
    double sigma2 = 1.0;     // presentation-time scale for variance columns
    bool integer_j_only = false;
    std::string model = "negative-power"; // or "white-noise" (debug mode)
    std::filesystem::path output_dir = ".";
    bool svg = false;

    void validate() const;

    // Sorted key=value serialization of every value-affecting field
    // (output_dir and svg are presentation targets and excluded).
    std::string canonical_string() const;

    // t_start, t_start + 1, ..., <= t_end.
    std::vector<double> t_grid() const;
};

// FNV-1a 64-bit over the canonical config string plus input provenance;
// stamped on every CSV row so figures are traceable to parameters.
std::uint64_t config_hash(const ExperimentConfig& config, const std::string& input_source);
std::string hash_hex(std::uint64_t h);

struct CommandResult {
    std::filesystem::path csv_path;
    std::optional<std::filesystem::path> svg_path;
    std::size_t data_rows = 0;
};

// Fig-1-style sweep: one row per t with the root j*, the variance of the
// estimator at the root, and the constraint residual.
CommandResult cmd_variance_curve(const ExperimentConfig& config, const Series& series);

// Fig-2-style comparison: the classic estimate plus one numerical estimate
// per t positioned at its j*, with |numerical - classic| as diagnostic.
CommandResult cmd_compare(const ExperimentConfig& config, const Series& series);

// The classic generalized least-squares estimate alone.
CommandResult cmd_classic(const ExperimentConfig& config, const Series& series);

// Limit identities over a ladder of n (default {10, 20, 40, 80, 160}).
CommandResult cmd_asymptotics(const ExperimentConfig& config, std::vector<int> n_ladder = {});

// Raw residual dump over integer j for a single t (= t_start).
CommandResult cmd_scan(const ExperimentConfig& config, const Series& series);

} // namespace krigmean

#endif
