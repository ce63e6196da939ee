#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "scalekit/fft.hpp"

#include <random>

using namespace scalekit;

namespace {

std::vector<std::complex<double>> random_signal(std::size_t n, unsigned seed) {
    std::mt19937 eng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<std::complex<double>> x(n);
    for (auto& v : x) v = {g(eng), g(eng)};
    return x;
}

double max_err(const std::vector<std::complex<double>>& a,
               const std::vector<std::complex<double>>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace

TEST_CASE("fft matches the naive dft") {
    for (std::size_t n : {std::size_t(64), std::size_t(256)}) {
        auto x = random_signal(n, 42);
        const auto ref = oracles::naive_dft(x, false);
        fft(x, false);
        CHECK(max_err(x, ref) < 1e-10);
    }
}

TEST_CASE("inverse fft round-trips") {
    auto x = random_signal(512, 9);
    const auto orig = x;
    fft(x, false);
    fft(x, true);
    CHECK(max_err(x, orig) < 1e-12);
}

TEST_CASE("fft rejects non-power-of-two lengths") {
    std::vector<std::complex<double>> x(96, {1.0, 0.0});
    CHECK_THROWS_AS(fft(x, false), std::invalid_argument);
    CHECK(next_pow2(96) == 128);
    CHECK(next_pow2(128) == 128);
    CHECK(next_pow2(1) == 1);
}
