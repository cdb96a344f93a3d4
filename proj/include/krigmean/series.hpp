#ifndef KRIGMEAN_SERIES_HPP
#define KRIGMEAN_SERIES_HPP

#include <Eigen/Core>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace krigmean {

// Observed sample v_1..v_N. Variances are always reported in units of
// sigma^2, so the series carries no scale convention of its own.
struct Series {
    std::vector<double> values;
    std::string source;

    // First n values as a vector; throws if fewer than n rows were ingested.
    Eigen::VectorXd head(Eigen::Index n) const;
};

// Read one numeric column from a CSV file (comma delimiter, '.' decimal
// point, optional single header row). The column is selected by 0-based
// index when `column` parses as an integer, by header name otherwise.
Series ingest(const std::filesystem::path& path, const std::string& column);

inline constexpr std::uint32_t kDemoSeed = 20251108;

// Bundled stand-in for an index price history: a seeded correlated walk
// (AR(1) increments, Irwin-Hall noise) that only uses exactly-specified
// integer and double arithmetic, so identical seeds give identical bits on
// every platform.
Series make_demo_series(std::uint32_t seed = kDemoSeed, std::size_t count = 600);

} // namespace krigmean

#endif
