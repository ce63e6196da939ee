#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "scalekit/dfa.hpp"
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

TEST_CASE("constant returns give a vanishing fluctuation function") {
    const auto sf = dfa_fluctuation(make_returns(std::vector<double>(64, 0.42)), 2,
                                    std::vector<int>{4, 6, 8, 12, 16});
    for (double v : sf.values) CHECK(v == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("hand-sized series matches the explicit-loop oracle") {
    const auto r = random_returns(16, 123);
    const auto sf = dfa_fluctuation(make_returns(r), 1, std::vector<int>{4});
    const double ref = oracles::brute_dfa(r, 1, 4);
    CHECK(std::abs(sf.values[0] - ref) <= 1e-10 * ref);
}

TEST_CASE("every admissible scale matches the oracle on random series") {
    for (unsigned seed : {1u, 2u, 3u}) {
        const std::size_t n = 32 + 8 * seed;
        const auto r = random_returns(n, seed);
        for (int order : {1, 2}) {
            std::vector<int> scales;
            for (int s = order + 2; s <= int(n) / 4; ++s) scales.push_back(s);
            if (scales.empty()) continue;
            const auto sf = dfa_fluctuation(make_returns(r), order, scales);
            for (std::size_t i = 0; i < scales.size(); ++i) {
                const double ref = oracles::brute_dfa(r, order, scales[i]);
                CHECK(std::abs(sf.values[i] - ref) <= 1e-10 * ref);
            }
        }
    }
}

TEST_CASE("white noise scales as n^(1/2)") {
    // ensemble mean over 10 seeds, N = 10000, fit over [10, 100]
    double sum = 0.0;
    const int seeds = 10;
    for (int s = 0; s < seeds; ++s) {
        const auto rs = generate({SynthKind::white, 10000, std::uint64_t(s)});
        const auto sf = dfa_fluctuation(rs, 2, ScaleGrid{6, 128, 20});
        sum += fit_exponent(sf, 10, 100).exponent;
    }
    CHECK(sum / seeds == doctest::Approx(0.50).epsilon(0.06));
}

TEST_CASE("polynomial trends below the detrending order are absorbed") {
    const auto r = random_returns(512, 77);
    const auto base = dfa_fluctuation(make_returns(r), 2, std::vector<int>{8, 16, 32});

    auto trended = r;
    for (std::size_t k = 0; k < trended.size(); ++k)
        trended[k] += 0.8 + 0.01 * double(k);
    const auto shifted = dfa_fluctuation(make_returns(trended), 2,
                                         std::vector<int>{8, 16, 32});
    for (std::size_t i = 0; i < base.values.size(); ++i)
        CHECK(std::abs(shifted.values[i] - base.values[i]) <= 1e-8 * base.values[i]);

    // order 3 absorbs a quadratic trend in the returns the same way
    auto quad = r;
    for (std::size_t k = 0; k < quad.size(); ++k)
        quad[k] += 0.5 + 0.01 * double(k) + 2e-5 * double(k) * double(k);
    const auto base3 = dfa_fluctuation(make_returns(r), 3, std::vector<int>{8, 16, 32});
    const auto quad3 = dfa_fluctuation(make_returns(quad), 3, std::vector<int>{8, 16, 32});
    for (std::size_t i = 0; i < base3.values.size(); ++i)
        CHECK(std::abs(quad3.values[i] - base3.values[i]) <= 1e-8 * base3.values[i]);
}

TEST_CASE("fluctuations scale linearly with input amplitude") {
    const auto r = random_returns(256, 5);
    auto scaled = r;
    for (double& x : scaled) x *= 3.5;
    const auto base = dfa_fluctuation(make_returns(r), 2, std::vector<int>{4, 8, 16});
    const auto amp = dfa_fluctuation(make_returns(scaled), 2, std::vector<int>{4, 8, 16});
    for (std::size_t i = 0; i < base.values.size(); ++i)
        CHECK(amp.values[i] == doctest::Approx(3.5 * base.values[i]).epsilon(1e-12));
}

TEST_CASE("fitted exponent is invariant under the logarithm base of returns") {
    // base-10 returns are natural-log returns divided by ln 10
    const auto rs = generate({SynthKind::fgn, 4096, 19, 0.7});
    auto base10 = rs;
    for (double& x : base10.values) x /= std::numbers::ln10;
    const auto f_nat = dfa_fluctuation(rs, 2, ScaleGrid{4, 128, 20});
    const auto f_b10 = dfa_fluctuation(base10, 2, ScaleGrid{4, 128, 20});
    const double a_nat = fit_exponent(f_nat, 8, 100).exponent;
    const double a_b10 = fit_exponent(f_b10, 8, 100).exponent;
    CHECK(a_nat == doctest::Approx(a_b10).epsilon(1e-12));
}

TEST_CASE("log F grows with log n on correlated input") {
    const auto rs = generate({SynthKind::fgn, 8192, 4, 0.7});
    const auto sf = dfa_fluctuation(rs, 2, ScaleGrid{6, 256, 8});
    for (std::size_t i = 1; i < sf.values.size(); ++i)
        CHECK(sf.values[i] > sf.values[i - 1]);
}

TEST_CASE("precondition violations are rejected") {
    const auto r = random_returns(64, 88);
    CHECK_THROWS_AS(dfa_fluctuation(make_returns(r), 2, std::vector<int>{3, 8}),
                    std::invalid_argument);  // below order+2
    CHECK_THROWS_AS(dfa_fluctuation(make_returns(r), 2, std::vector<int>{4, 24}),
                    std::invalid_argument);  // beyond N/4
    CHECK_THROWS_AS(dfa_fluctuation(make_returns(r), 0, std::vector<int>{4}),
                    std::invalid_argument);
    CHECK_THROWS_AS(dfa_fluctuation(make_returns(r), 2, std::vector<int>{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        dfa_fluctuation(make_returns(random_returns(15, 1)), 2, std::vector<int>{4}),
        std::invalid_argument);  // series shorter than 4*min_scale
}
