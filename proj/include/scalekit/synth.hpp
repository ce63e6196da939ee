#pragma once

#include "scalekit/series.hpp"

#include <cstdint>
#include <string>

namespace scalekit {

enum class SynthKind { white, fgn, sinusoid_plus_noise };

// Deterministic synthetic-series request. The same spec always yields the
// same series: draws come from mt19937_64 with the 53-bit conversion
// u = (x >> 11) * 2^-53 and the Box-Muller transform
// z = sqrt(-2 ln(1-u1)) * cos(2 pi u2) (the sin partner is the second
// output), so the stream is pinned by the seed alone.
struct SynthSpec {
    SynthKind kind = SynthKind::white;
    std::size_t length = 0;
    std::uint64_t seed = 0;
    double h_target = 0.5;        // fgn only, in (0,1)
    double period = 0.0;          // sinusoid kind: period in samples
    double amplitude_ratio = 0.0; // sinusoid amplitude over noise std
};

// white: i.i.d. standard Gaussian draws.
// fgn: spectral synthesis with one-sided amplitudes ~ f^(-beta/2),
//      beta = 2*h_target - 1, complex-Gaussian coefficients, zero DC,
//      inverse FFT on the next power of two, truncated to length and
//      standardized to unit sample variance.
// sinusoid_plus_noise: the white series of the same seed plus
//      amplitude_ratio * sin(2 pi k / period).
ReturnSeries generate(const SynthSpec& spec);

// Exponentiates cumulative returns into a daily close file starting at
// `initial_price`, with consecutive calendar dates from the epoch, so
// synthetic data flows through the same ingestion path as market data.
PriceSeries to_price_series(const ReturnSeries& returns, std::string name,
                            double initial_price = 100.0);

}  // namespace scalekit
