#include "scalekit/tddma.hpp"

#include "scalekit/dma.hpp"
#include "scalekit/fit.hpp"
#include "scalekit/grid.hpp"
#include "scalekit/parallel.hpp"

#include <cmath>
#include <stdexcept>

namespace scalekit {

HurstTrack td_dma(const ReturnSeries& returns, const TdConfig& cfg) {
    if (cfg.step < 1) throw std::invalid_argument("tddma: step must be >= 1");
    if (cfg.window_size < cfg.min_window)
        throw std::invalid_argument("tddma: window_size below min_window");
    if (returns.size() < static_cast<std::size_t>(cfg.window_size))
        throw std::invalid_argument("tddma: series shorter than one window (" +
                                    std::to_string(returns.size()) + " < " +
                                    std::to_string(cfg.window_size) + ")");
    if (!(cfg.fit_lo < cfg.fit_hi))
        throw std::invalid_argument("tddma: need fit_lo < fit_hi");

    HurstTrack track;

    int scale_lo = cfg.scale_lo;
    if (scale_lo < 3) {
        track.notes.push_back("scale_lo raised from " + std::to_string(scale_lo) +
                              " to 3 (centered windows must be odd and >= 3)");
        scale_lo = 3;
    }
    int scale_hi = cfg.scale_hi;
    const int admissible_hi = cfg.window_size / 4;
    if (scale_hi > admissible_hi) {
        track.notes.push_back("scale_hi clipped from " + std::to_string(scale_hi) +
                              " to " + std::to_string(admissible_hi) +
                              " (window_size/4 bound)");
        scale_hi = admissible_hi;
    }
    if (scale_lo > scale_hi)
        throw std::invalid_argument("tddma: no admissible scales for this window");

    double fit_lo = cfg.fit_lo, fit_hi = cfg.fit_hi;
    if (fit_hi > scale_hi) {
        track.notes.push_back("fit_hi clipped from " + std::to_string(fit_hi) +
                              " to " + std::to_string(scale_hi));
        fit_hi = scale_hi;
    }
    if (fit_lo < scale_lo) fit_lo = scale_lo;

    const std::vector<int> scales =
        odd_scales({scale_lo, scale_hi, cfg.points_per_decade});

    const std::size_t n_s = static_cast<std::size_t>(cfg.window_size);
    const std::size_t n_windows = (returns.size() - n_s) / cfg.step + 1;
    track.positions.resize(n_windows);
    track.local_h.assign(n_windows, std::numeric_limits<double>::quiet_NaN());

    parallel_for(0, n_windows, [&](std::size_t j) {
        const std::size_t start = j * cfg.step;
        track.positions[j] = start + n_s - 1;
        const std::span<const double> window(returns.values.data() + start, n_s);
        const Profile prof = build_profile(window);

        ScalingFunction sf;
        sf.method = Method::cdma;
        sf.scales.assign(scales.begin(), scales.end());
        sf.values = cdma_sigmas(prof.values, scales);
        try {
            const ExponentFit fit = fit_exponent(sf, fit_lo, fit_hi);
            if (fit.r_squared >= cfg.r2_floor) track.local_h[j] = fit.exponent;
        } catch (const std::runtime_error&) {
            // degenerate window (e.g. constant data): stays invalid
        }
    }, 16);

    long double sum = 0.0L;
    std::size_t valid = 0;
    for (double h : track.local_h) {
        if (std::isnan(h)) continue;
        sum += h;
        ++valid;
    }
    track.valid_fraction = double(valid) / double(n_windows);
    if (valid > 0) track.mean_h = static_cast<double>(sum / valid);
    return track;
}

double mean_local_hurst(const HurstTrack& track) {
    if (!(track.valid_fraction > 0.0) || std::isnan(track.mean_h))
        throw std::runtime_error("tddma: no valid windows");
    return track.mean_h;
}

}  // namespace scalekit
