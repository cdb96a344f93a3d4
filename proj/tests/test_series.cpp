#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "krigmean/errors.hpp"
#include "krigmean/series.hpp"

using namespace krigmean;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const auto dir = std::filesystem::temp_directory_path() / "krigmean_series_tests";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

} // namespace

TEST_CASE("ingest a bare numeric column") {
    const auto path = write_temp("bare.csv", "1.0\n2.0\n3.0\n");
    const auto s = ingest(path, "0");
    REQUIRE(s.values.size() == 3);
    CHECK(s.values[0] == 1.0);
    CHECK(s.values[1] == 2.0);
    CHECK(s.values[2] == 3.0);
    CHECK(s.source == path.string());
}

TEST_CASE("ingest selects a column by header name") {
    const auto path = write_temp("named.csv", "date,close\n1,10.5\n2,11.25\n3,9.75\n");
    const auto s = ingest(path, "close");
    REQUIRE(s.values.size() == 3);
    CHECK(s.values[0] == 10.5);
    CHECK(s.values[2] == 9.75);
}

TEST_CASE("ingest by index skips a non-numeric header row") {
    const auto path = write_temp("headed.csv", "close\n5.0\n6.0\n");
    const auto s = ingest(path, "0");
    REQUIRE(s.values.size() == 2);
    CHECK(s.values[0] == 5.0);
}

TEST_CASE("ingest by index on a second column") {
    const auto path = write_temp("two.csv", "a,b\n1,4.0\n2,5.0\n3,6.0\n");
    const auto s = ingest(path, "1");
    REQUIRE(s.values.size() == 3);
    CHECK(s.values[1] == 5.0);
}

TEST_CASE("non-numeric cell is reported with its data row") {
    const auto path = write_temp("bad.csv", "1\n2\n3\n4\nabc\n6\n");
    CHECK_THROWS_AS(ingest(path, "0"), ParseError);
    try {
        ingest(path, "0");
    } catch (const ParseError& e) {
        CHECK(e.row() == 5);
    }
}

TEST_CASE("short rows and missing columns are rejected") {
    const auto path = write_temp("short.csv", "1.0,2.0\n3.0\n");
    CHECK_THROWS_AS(ingest(path, "1"), ParseError);
}

TEST_CASE("missing file and missing header column") {
    CHECK_THROWS_AS(ingest("/nonexistent/nowhere.csv", "0"), IoError);
    const auto path = write_temp("cols.csv", "a,b\n1,2\n");
    CHECK_THROWS_AS(ingest(path, "volume"), IoError);
}

TEST_CASE("empty file is rejected") {
    const auto path = write_temp("empty.csv", "\n\n");
    CHECK_THROWS_AS(ingest(path, "0"), IoError);
}

TEST_CASE("head enforces the sample size") {
    Series s{{1.0, 2.0, 3.0}, "test"};
    CHECK(s.head(2).size() == 2);
    CHECK(s.head(2)(1) == 2.0);
    CHECK_THROWS_AS(s.head(4), InvalidParameterError);
}

TEST_CASE("demo series is reproducible and index-like") {
    const auto a = make_demo_series();
    const auto b = make_demo_series();
    REQUIRE(a.values.size() == 600);
    CHECK(a.values == b.values); // bitwise
    CHECK(a.values[0] == 4000.0);
    CHECK(a.source == "demo:seed=" + std::to_string(kDemoSeed));
    for (double v : a.values)
        CHECK(v > 0.0);

    const auto other = make_demo_series(kDemoSeed + 1);
    CHECK(a.values != other.values);
}

TEST_CASE("committed demo data matches the generator") {
    const auto path = std::filesystem::path(KRIGMEAN_SOURCE_DIR) / "data" / "demo_series.csv";
    REQUIRE(std::filesystem::exists(path));
    const auto fromfile = ingest(path, "close");
    const auto generated = make_demo_series();
    REQUIRE(fromfile.values.size() == generated.values.size());
    for (std::size_t k = 0; k < generated.values.size(); ++k)
        CHECK(fromfile.values[k] == doctest::Approx(generated.values[k]).epsilon(1e-11));
}
