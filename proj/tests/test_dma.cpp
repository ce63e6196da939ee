#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "scalekit/dfa.hpp"
#include "scalekit/dma.hpp"
#include "scalekit/fit.hpp"
#include "scalekit/synth.hpp"

#include <random>

using namespace scalekit;

namespace {

ReturnSeries make_returns(std::vector<double> values) {
    ReturnSeries rs;
    rs.values = std::move(values);
    rs.source_name = "t";
    return rs;
}

std::vector<double> random_returns(std::size_t n, unsigned seed) {
    std::mt19937 eng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<double> r(n);
    for (double& x : r) x = g(eng);
    return r;
}

}  // namespace

TEST_CASE("centered average of a constant sequence leaves no residual") {
    const std::vector<double> x(32, 4.2);
    for (double r : centered_ma_residuals(x, 5))
        CHECK(r == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(cdma_sigma(x, 5) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("centered average of a linear ramp equals its center") {
    std::vector<double> x(41);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = double(i);
    for (int n : {3, 5, 9}) {
        const auto res = centered_ma_residuals(x, n);
        CHECK(res.size() == x.size() - n + 1);
        for (double r : res) CHECK(std::abs(r) < 1e-12);
    }
}

TEST_CASE("hand-sized series matches the explicit-loop oracle") {
    const auto r = random_returns(16, 321);
    const auto sf = dma_fluctuation(make_returns(r), std::vector<int>{3});
    const double ref = oracles::brute_cdma(r, 3);
    CHECK(std::abs(sf.values[0] - ref) <= 1e-10 * ref);

    const auto r5 = random_returns(24, 55);
    const auto sf5 = dma_fluctuation(make_returns(r5), std::vector<int>{5});
    const double ref5 = oracles::brute_cdma(r5, 5);
    CHECK(std::abs(sf5.values[0] - ref5) <= 1e-10 * ref5);
}

TEST_CASE("every admissible odd scale matches the oracle") {
    for (unsigned seed : {10u, 20u}) {
        const std::size_t n = 48 + 16 * seed / 10;
        const auto r = random_returns(n, seed);
        std::vector<int> scales;
        for (int s = 3; s <= int(n) / 4; s += 2) scales.push_back(s);
        const auto sf = dma_fluctuation(make_returns(r), scales);
        for (std::size_t i = 0; i < scales.size(); ++i) {
            const double ref = oracles::brute_cdma(r, scales[i]);
            CHECK(std::abs(sf.values[i] - ref) <= 1e-10 * ref);
        }
    }
}

TEST_CASE("white noise yields H near one half") {
    double sum = 0.0;
    const int seeds = 10;
    for (int s = 0; s < seeds; ++s) {
        const auto rs = generate({SynthKind::white, 10000, std::uint64_t(s)});
        const auto sf = dma_fluctuation(rs, ScaleGrid{5, 128, 20});
        sum += fit_exponent(sf, 11, 101).exponent;
    }
    CHECK(sum / seeds == doctest::Approx(0.50).epsilon(0.06));
}

TEST_CASE("sigma scales linearly with input amplitude") {
    const auto r = random_returns(256, 6);
    auto scaled = r;
    for (double& x : scaled) x *= 2.25;
    const auto base = dma_fluctuation(make_returns(r), std::vector<int>{5, 11, 21});
    const auto amp = dma_fluctuation(make_returns(scaled), std::vector<int>{5, 11, 21});
    for (std::size_t i = 0; i < base.values.size(); ++i)
        CHECK(amp.values[i] == doctest::Approx(2.25 * base.values[i]).epsilon(1e-12));
}

TEST_CASE("DFA and cDMA agree on long correlated input") {
    const auto rs = generate({SynthKind::fgn, 8192, 31, 0.7});
    const double alpha =
        fit_exponent(dfa_fluctuation(rs, 2, ScaleGrid{6, 256, 16}), 10, 100).exponent;
    const double hurst =
        fit_exponent(dma_fluctuation(rs, ScaleGrid{5, 256, 16}), 11, 101).exponent;
    CHECK(std::abs(alpha - hurst) <= 0.05);
}

TEST_CASE("precondition violations are rejected") {
    const auto r = random_returns(64, 14);
    CHECK_THROWS_AS(dma_fluctuation(make_returns(r), std::vector<int>{4}),
                    std::invalid_argument);  // even scale
    CHECK_THROWS_AS(dma_fluctuation(make_returns(r), std::vector<int>{1}),
                    std::invalid_argument);  // below 3
    CHECK_THROWS_AS(dma_fluctuation(make_returns(r), std::vector<int>{33}),
                    std::invalid_argument);  // beyond N/4
    CHECK_THROWS_AS(centered_ma_residuals(std::vector<double>(10, 1.0), 4),
                    std::invalid_argument);
}
