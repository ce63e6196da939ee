#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "scalekit/dfa.hpp"
#include "scalekit/fit.hpp"
#include "scalekit/series.hpp"
#include "scalekit/synth.hpp"

#include <cmath>

using namespace scalekit;

TEST_CASE("white noise has standard Gaussian moments") {
    const auto rs = generate({SynthKind::white, 10000, 42});
    CHECK(std::abs(oracles::mean(rs.values)) <= 0.04);
    CHECK(oracles::sample_std(rs.values) == doctest::Approx(1.0).epsilon(0.03));
}

TEST_CASE("identical specs reproduce bit-identical series") {
    const SynthSpec spec{SynthKind::fgn, 2048, 7, 0.65};
    const auto a = generate(spec);
    const auto b = generate(spec);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.values[i] == b.values[i]);

    SynthSpec other = spec;
    other.seed = 8;
    const auto c = generate(other);
    bool all_equal = true;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.values[i] != c.values[i]) all_equal = false;
    CHECK(!all_equal);
}

TEST_CASE("fgn at H one half behaves like white noise") {
    double sum = 0.0;
    const int seeds = 4;
    for (int s = 0; s < seeds; ++s) {
        const auto rs = generate({SynthKind::fgn, 10000, std::uint64_t(s), 0.5});
        sum += fit_exponent(dfa_fluctuation(rs, 2, ScaleGrid{6, 128, 16}), 10, 100)
                   .exponent;
    }
    CHECK(sum / seeds == doctest::Approx(0.5).epsilon(0.06));
}

TEST_CASE("fgn recovers the target exponent per seed") {
    for (std::uint64_t seed : {11ull, 12ull}) {
        const auto rs = generate({SynthKind::fgn, 16384, seed, 0.7});
        const double alpha =
            fit_exponent(dfa_fluctuation(rs, 2, ScaleGrid{8, 384, 16}), 20, 300)
                .exponent;
        CHECK(alpha >= 0.65);
        CHECK(alpha <= 0.75);
    }
}

TEST_CASE("fitted exponent increases with the target") {
    const std::size_t n = 8192;
    double prev = -1.0;
    for (double h : {0.3, 0.7}) {
        double sum = 0.0;
        const int seeds = 4;
        for (int s = 0; s < seeds; ++s)
            sum += fit_exponent(
                       dfa_fluctuation(generate({SynthKind::fgn, n,
                                                 std::uint64_t(100 + s), h}),
                                       2, ScaleGrid{8, 256, 16}),
                       16, 160)
                       .exponent;
        const double mean_alpha = sum / seeds;
        CHECK(mean_alpha > prev);
        prev = mean_alpha;
    }
    CHECK(prev > 0.5);  // the H = 0.7 ensemble sits above the uncorrelated line
}

TEST_CASE("autocorrelation decay cross-checks the synthesis exponent") {
    // ensemble-averaged r(tau) ~ tau^(2H-2)
    const double h = 0.8;
    std::vector<double> mean_acf(51, 0.0);
    const int seeds = 6;
    for (int s = 0; s < seeds; ++s) {
        const auto rs = generate({SynthKind::fgn, 16384, std::uint64_t(200 + s), h});
        for (std::size_t tau = 1; tau < mean_acf.size(); ++tau)
            mean_acf[tau] += oracles::autocorrelation(rs.values, tau) / seeds;
    }
    const double h_acf = oracles::acf_hurst(mean_acf, 2, 50);
    CHECK(h_acf == doctest::Approx(h).epsilon(0.1));
}

TEST_CASE("zero-amplitude sinusoid equals white noise with the same seed") {
    const auto w = generate({SynthKind::white, 1024, 5});
    SynthSpec spec{SynthKind::sinusoid_plus_noise, 1024, 5};
    spec.period = 90.0;
    spec.amplitude_ratio = 0.0;
    const auto s = generate(spec);
    for (std::size_t i = 0; i < w.size(); ++i) CHECK(w.values[i] == s.values[i]);
}

TEST_CASE("invalid specs are rejected") {
    CHECK_THROWS_AS(generate({SynthKind::white, 32, 1}), std::invalid_argument);
    CHECK_THROWS_AS(generate({SynthKind::fgn, 1024, 1, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(generate({SynthKind::fgn, 1024, 1, 1.0}), std::invalid_argument);
    SynthSpec bad{SynthKind::sinusoid_plus_noise, 1024, 1};
    bad.period = 0.0;
    CHECK_THROWS_AS(generate(bad), std::invalid_argument);
    bad.period = 90.0;
    bad.amplitude_ratio = -1.0;
    CHECK_THROWS_AS(generate(bad), std::invalid_argument);
}

TEST_CASE("price conversion round-trips through log returns") {
    const auto rs = generate({SynthKind::white, 256, 9});
    const auto prices = to_price_series(rs, "synthetic");
    REQUIRE(prices.size() == rs.size() + 1);
    CHECK(prices.closes[0] == doctest::Approx(100.0));
    const auto back = log_returns(prices);
    for (std::size_t i = 0; i < rs.size(); ++i)
        CHECK(back.values[i] == doctest::Approx(rs.values[i]).epsilon(1e-9));
    for (std::size_t i = 1; i < prices.size(); ++i)
        CHECK(prices.dates[i - 1] < prices.dates[i]);
}
