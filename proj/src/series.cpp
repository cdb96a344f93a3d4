#include "krigmean/series.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "krigmean/errors.hpp"

namespace krigmean {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ','))
        cells.push_back(cell);
    if (!line.empty() && line.back() == ',')
        cells.emplace_back();
    return cells;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& raw, double& out) {
    const std::string s = trim(raw);
    if (s.empty())
        return false;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

bool parse_index(const std::string& s, std::size_t& out) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
        return false;
    out = 0;
    for (char c : s)
        out = out * 10 + static_cast<std::size_t>(c - '0');
    return true;
}

} // namespace

Eigen::VectorXd Series::head(Eigen::Index n) const {
    if (static_cast<std::size_t>(n) > values.size())
        throw InvalidParameterError("series '" + source + "' has " +
                                    std::to_string(values.size()) + " rows, need n = " +
                                    std::to_string(n));
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i)
        v(i) = values[static_cast<std::size_t>(i)];
    return v;
}

Series ingest(const std::filesystem::path& path, const std::string& column) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open input file: " + path.string());

    std::size_t col_index = 0;
    const bool by_index = parse_index(trim(column), col_index);

    Series series;
    series.source = path.string();

    std::string line;
    std::size_t line_no = 0;   // physical line in the file
    std::size_t data_row = 0;  // 1-based data row, header excluded
    bool header_checked = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty())
            continue;
        auto cells = split_csv_line(line);

        if (!header_checked) {
            header_checked = true;
            if (by_index) {
                // Header is optional: a non-numeric first cell in the
                // selected column marks it as a header row.
                if (col_index < cells.size()) {
                    double probe;
                    if (!parse_double(cells[col_index], probe))
                        continue;
                }
            } else {
                auto it = std::find_if(cells.begin(), cells.end(), [&](const std::string& c) {
                    return trim(c) == trim(column);
                });
                if (it == cells.end())
                    throw IoError("column '" + column + "' not found in header of " +
                                  path.string());
                col_index = static_cast<std::size_t>(std::distance(cells.begin(), it));
                continue;
            }
        }

        ++data_row;
        if (col_index >= cells.size())
            throw ParseError("row " + std::to_string(data_row) + " of " + path.string() +
                                 " has no column " + std::to_string(col_index),
                             data_row);
        double value;
        if (!parse_double(cells[col_index], value) || !std::isfinite(value))
            throw ParseError("row " + std::to_string(data_row) + " of " + path.string() +
                                 ": cell '" + trim(cells[col_index]) + "' is not a finite number",
                             data_row);
        series.values.push_back(value);
    }

    if (series.values.empty())
        throw IoError("no data rows in " + path.string());
    return series;
}

Series make_demo_series(std::uint32_t seed, std::size_t count) {
    std::mt19937 rng(seed);
    auto uniform = [&rng]() { return static_cast<double>(rng()) * (1.0 / 4294967296.0); };
    // Irwin-Hall(12) - 6: zero mean, unit variance, bit-reproducible.
    auto gauss = [&uniform]() {
        double s = 0.0;
        for (int k = 0; k < 12; ++k)
            s += uniform();
        return s - 6.0;
    };

    Series series;
    series.source = "demo:seed=" + std::to_string(seed);
    series.values.reserve(count);

    double level = 4000.0;
    double momentum = 0.0;
    series.values.push_back(level);
    for (std::size_t k = 1; k < count; ++k) {
        momentum = 0.55 * momentum + 28.0 * gauss();
        level += momentum + 1.2;
        series.values.push_back(level);
    }
    return series;
}

} // namespace krigmean
