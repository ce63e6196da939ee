#include <doctest.h>

#include <stdexcept>

#include "scalekit/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace scalekit;

namespace {

PriceSeries parse(const std::string& text) {
    std::istringstream in(text);
    return parse_price_csv(in, "test", "mem");
}

}  // namespace

TEST_CASE("a minimal valid file parses") {
    const auto ps = parse("date,close\n2020-01-02,100.5\n2020-01-03,101.25\n");
    CHECK(ps.size() == 2);
    CHECK(ps.closes[1] == doctest::Approx(101.25));
    CHECK(format_date(ps.dates[0]) == "2020-01-02");
}

TEST_CASE("comments and blank lines are tolerated") {
    const auto ps = parse("# provenance\ndate,close\n\n2020-01-02,100\n2020-01-03,101\n");
    CHECK(ps.size() == 2);
}

TEST_CASE("ingestion errors carry line numbers") {
    const std::string head = "date,close\n2020-01-02,100\n2020-01-03,101\n"
                             "2020-01-06,102\n2020-01-07,103\n2020-01-08,104\n";
    CHECK_THROWS_WITH_AS(parse(head + "2020-01-09,0\n"),
                         doctest::Contains("line 7"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse(head + "2020-01-09,-4\n"),
                         doctest::Contains("positive"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse(head + "2020-01-05,105\n"),
                         doctest::Contains("ascending"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse(head + "2020-01-08,105\n"),
                         doctest::Contains("duplicate"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse(head + "2020-13-01,105\n"),
                         doctest::Contains("ISO-8601"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse(head + "2020-01-09,abc\n"),
                         doctest::Contains("malformed close"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse("close,date\n"), doctest::Contains("header"),
                         std::runtime_error);
    CHECK_THROWS_AS(parse(""), std::runtime_error);
    CHECK_THROWS_AS(ingest("/no/such/file.csv", "x"), std::runtime_error);
}

TEST_CASE("scientific formatting keeps at least 10 significant digits") {
    const std::string s = format_sci(1.0 / 3.0);
    CHECK(s.find("3.3333333333") == 0);
    CHECK(s.find('e') != std::string::npos);
}

TEST_CASE("scaling functions round-trip through their file format") {
    ScalingFunction sf;
    sf.method = Method::scalegram;
    sf.order = 10;
    sf.series_name = "demo";
    sf.scales = {4, 8, 16, 32};
    sf.values = {1.5e-3, 2.5e-2, 0.4, 6.75};

    std::ostringstream os;
    write_scaling_function(os, sf, {"note one"});
    const std::string text = os.str();
    CHECK(text.find("# method=scalegram order=10 series=demo") == 0);
    CHECK(text.find("# note one") != std::string::npos);
    CHECK(text.find("scale,value") != std::string::npos);

    const auto path = std::filesystem::temp_directory_path() / "sk_sf_roundtrip.csv";
    write_file(path.string(), text);
    const auto back = read_scaling_function(path.string());
    std::filesystem::remove(path);

    CHECK(back.method == Method::scalegram);
    CHECK(back.order == 10);
    CHECK(back.series_name == "demo");
    REQUIRE(back.size() == sf.size());
    for (std::size_t i = 0; i < sf.size(); ++i) {
        CHECK(back.scales[i] == doctest::Approx(sf.scales[i]).epsilon(1e-12));
        CHECK(back.values[i] == doctest::Approx(sf.values[i]).epsilon(1e-10));
    }
}

TEST_CASE("hurst track export leaves invalid windows empty") {
    HurstTrack track;
    track.positions = {999, 1001, 1003};
    track.local_h = {0.5, std::nan(""), 0.7};
    track.mean_h = 0.6;
    track.valid_fraction = 2.0 / 3.0;
    track.notes = {"scale_hi clipped from 500 to 250 (window_size/4 bound)"};

    std::ostringstream os;
    write_hurst_track(os, track);
    const std::string text = os.str();
    CHECK(text.find("mean_h=0.6") != std::string::npos);
    CHECK(text.find("# note: scale_hi clipped") != std::string::npos);
    CHECK(text.find("position,local_h") != std::string::npos);
    CHECK(text.find("\n1001,\n") != std::string::npos);  // empty field, no sentinel
}

TEST_CASE("cycle report export carries the baseline in its header") {
    CycleReport report;
    report.baseline.exponent = 0.125;
    report.residual_mad = 0.01;
    report.crossover_scales = {12.5, 80.0};
    DetectedCycle c;
    c.period = 88.0;
    c.scale = 45.4;
    c.prominence = 12.0;
    c.low_order_prominence = 2.0;
    c.window_low = 70.0;
    c.window_high = 110.0;
    report.detected_periods.push_back(c);

    std::ostringstream os;
    write_cycle_report(os, report);
    const std::string text = os.str();
    CHECK(text.find("# baseline_exponent=0.125") == 0);
    CHECK(text.find("crossover_scales=12.5;80") != std::string::npos);
    CHECK(text.find("period,prominence,window_low,window_high") != std::string::npos);
    CHECK(text.find("88,12,70,110") != std::string::npos);
}

TEST_CASE("wavelet field export is a labeled matrix") {
    WaveletField field;
    field.scales = {2.0, 4.0};
    field.translations = 3;
    field.coefficients = {{1, 2, 3}, {4, 5, 6}};
    std::ostringstream os;
    write_wavelet_field(os, field);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "scale\\translation,0,1,2");
    std::getline(in, line);
    CHECK(line.rfind("2,", 0) == 0);
}
