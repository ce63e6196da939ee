#pragma once

#include "scalekit/series.hpp"

#include <limits>
#include <string>
#include <vector>

namespace scalekit {

// Sliding-window configuration for the time-dependent DMA estimator.
struct TdConfig {
    int window_size = 1000;  // N_s
    int step = 2;            // delta_s
    int scale_lo = 3;        // odd-window lower bound
    int scale_hi = 500;      // clipped to window_size/4 with a notice
    double fit_lo = 11.0;
    double fit_hi = 201.0;
    int min_window = 256;    // smallest admissible window
    double r2_floor = 0.90;  // minimum r^2 for a valid local fit
    int points_per_decade = 20;
};

// Time-indexed local Hurst exponents. Invalid windows (fit below the r^2
// floor, or degenerate data) carry NaN and are excluded from mean_h.
struct HurstTrack {
    std::vector<std::size_t> positions;  // window-end indices, step apart
    std::vector<double> local_h;
    double mean_h = std::numeric_limits<double>::quiet_NaN();
    double valid_fraction = 0.0;
    std::vector<std::string> notes;  // configuration clipping notices
};

// Runs the cDMA procedure on each sliding window (fresh window-local
// profile), fits H over [fit_lo, fit_hi], and assembles the track.
HurstTrack td_dma(const ReturnSeries& returns, const TdConfig& cfg);

// Arithmetic mean of the valid local exponents; throws if none are valid.
double mean_local_hurst(const HurstTrack& track);

}  // namespace scalekit
