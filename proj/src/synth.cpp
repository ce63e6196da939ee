#include "scalekit/synth.hpp"

#include "scalekit/fft.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace scalekit {

namespace {

// Seeded Gaussian stream with a pinned algorithm: mt19937_64 words are
// mapped to [0,1) through u = (x >> 11) * 2^-53 and paired through
// Box-Muller. The draw order is part of the contract; changing it would
// silently invalidate frozen expected values downstream.
class GaussianStream {
  public:
    explicit GaussianStream(std::uint64_t seed) : eng_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = next_u53();
        const double u2 = next_u53();
        const double radius = std::sqrt(-2.0 * std::log(1.0 - u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

  private:
    double next_u53() { return double(eng_() >> 11) * 0x1.0p-53; }

    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

void check_spec(const SynthSpec& spec) {
    if (spec.length < 64)
        throw std::invalid_argument("synth: length must be >= 64");
    if (spec.kind == SynthKind::fgn &&
        !(spec.h_target > 0.0 && spec.h_target < 1.0))
        throw std::invalid_argument("synth: fgn h_target must lie in (0,1)");
    if (spec.kind == SynthKind::sinusoid_plus_noise) {
        if (!(spec.period > 0.0))
            throw std::invalid_argument("synth: sinusoid period must be > 0");
        if (spec.amplitude_ratio < 0.0)
            throw std::invalid_argument("synth: amplitude_ratio must be >= 0");
    }
}

std::vector<double> white_noise(std::size_t n, std::uint64_t seed) {
    GaussianStream g(seed);
    std::vector<double> out(n);
    for (double& x : out) x = g.next();
    return out;
}

// Power-law spectral synthesis: complex-Gaussian one-sided coefficients
// with amplitude f^(-beta/2), beta = 2H-1, zero DC, Hermitian-symmetric
// spectrum, inverse FFT, truncation to the requested length, and
// standardization to unit sample variance.
std::vector<double> fgn_noise(std::size_t n, std::uint64_t seed, double h) {
    const std::size_t m = next_pow2(n);
    const double beta = 2.0 * h - 1.0;
    GaussianStream g(seed);
    std::vector<std::complex<double>> spec(m, {0.0, 0.0});
    for (std::size_t i = 1; i <= m / 2; ++i) {
        const double f = double(i) / double(m);
        const double amp = std::pow(f, -0.5 * beta);
        const double g1 = g.next();
        const double g2 = g.next();
        if (i < m / 2) {
            spec[i] = std::complex<double>(g1, g2) * (amp / std::numbers::sqrt2);
            spec[m - i] = std::conj(spec[i]);
        } else {
            spec[i] = amp * g1;  // Nyquist bin stays real
        }
    }
    fft(spec, true);

    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = spec[k].real();

    double mean = 0.0;
    for (double x : out) mean += x;
    mean /= double(n);
    double var = 0.0;
    for (double x : out) var += (x - mean) * (x - mean);
    var /= double(n);
    if (!(var > 0.0)) throw std::runtime_error("synth: degenerate fgn draw");
    const double inv_sd = 1.0 / std::sqrt(var);
    for (double& x : out) x *= inv_sd;
    return out;
}

}  // namespace

ReturnSeries generate(const SynthSpec& spec) {
    check_spec(spec);
    ReturnSeries rs;
    switch (spec.kind) {
        case SynthKind::white:
            rs.values = white_noise(spec.length, spec.seed);
            rs.source_name = "white-" + std::to_string(spec.seed);
            break;
        case SynthKind::fgn:
            rs.values = fgn_noise(spec.length, spec.seed, spec.h_target);
            rs.source_name = "fgn-" + std::to_string(spec.seed);
            break;
        case SynthKind::sinusoid_plus_noise: {
            rs.values = white_noise(spec.length, spec.seed);
            const double w = 2.0 * std::numbers::pi / spec.period;
            for (std::size_t k = 0; k < rs.values.size(); ++k)
                rs.values[k] += spec.amplitude_ratio * std::sin(w * double(k));
            rs.source_name = "sin-" + std::to_string(spec.seed);
            break;
        }
    }
    return rs;
}

PriceSeries to_price_series(const ReturnSeries& returns, std::string name,
                            double initial_price) {
    if (!(initial_price > 0.0))
        throw std::invalid_argument("synth: initial price must be > 0");
    PriceSeries ps;
    ps.name = std::move(name);
    ps.closes.resize(returns.size() + 1);
    ps.dates.resize(returns.size() + 1);
    const Date epoch{std::chrono::year{2000} / 1 / 1};
    double log_price = std::log(initial_price);
    for (std::size_t k = 0; k <= returns.size(); ++k) {
        ps.dates[k] = epoch + std::chrono::days(long(k));
        ps.closes[k] = std::exp(log_price);
        if (k < returns.size()) log_price += returns.values[k];
    }
    return ps;
}

}  // namespace scalekit
