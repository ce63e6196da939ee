#include "scalekit/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace scalekit {

namespace {

void check(const ScaleGrid& grid) {
    if (grid.min_scale < 1 || grid.max_scale < grid.min_scale)
        throw std::invalid_argument("scale grid: need 1 <= min_scale <= max_scale");
    if (grid.points_per_decade < 1)
        throw std::invalid_argument("scale grid: points_per_decade must be >= 1");
}

std::vector<double> raw_points(double lo, double hi, int per_decade) {
    std::vector<double> pts;
    const double step = 1.0 / per_decade;
    const double llo = std::log10(lo), lhi = std::log10(hi);
    for (int k = 0;; ++k) {
        const double l = llo + k * step;
        if (l > lhi + 1e-12) break;
        pts.push_back(std::pow(10.0, l));
    }
    if (pts.empty() || std::abs(pts.back() - hi) > 1e-9 * hi) pts.push_back(hi);
    return pts;
}

}  // namespace

std::vector<int> integer_scales(const ScaleGrid& grid) {
    check(grid);
    std::vector<int> out;
    for (double p : raw_points(grid.min_scale, grid.max_scale, grid.points_per_decade)) {
        int n = static_cast<int>(std::lround(p));
        n = std::clamp(n, grid.min_scale, grid.max_scale);
        if (out.empty() || out.back() != n) out.push_back(n);
    }
    return out;
}

std::vector<int> odd_scales(const ScaleGrid& grid) {
    check(grid);
    std::vector<int> out;
    for (double p : raw_points(grid.min_scale, grid.max_scale, grid.points_per_decade)) {
        // nearest odd integer, floored at 3
        int n = 2 * static_cast<int>(std::lround((p - 1.0) / 2.0)) + 1;
        n = std::max(n, 3);
        if (n > grid.max_scale) n = grid.max_scale % 2 ? grid.max_scale : grid.max_scale - 1;
        if (n < 3) continue;
        if (out.empty() || out.back() != n) out.push_back(n);
    }
    return out;
}

std::vector<double> log_spaced_scales(double min_scale, double max_scale,
                                      int voices_per_octave) {
    if (!(min_scale > 0.0) || !(max_scale >= min_scale))
        throw std::invalid_argument("wavelet scales: need 0 < min_scale <= max_scale");
    if (voices_per_octave < 1)
        throw std::invalid_argument("wavelet scales: voices_per_octave must be >= 1");
    std::vector<double> out;
    const double step = 1.0 / voices_per_octave;
    const double llo = std::log2(min_scale), lhi = std::log2(max_scale);
    for (int k = 0;; ++k) {
        const double l = llo + k * step;
        if (l > lhi + 1e-12) break;
        out.push_back(std::exp2(l));
    }
    if (std::abs(out.back() - max_scale) > 1e-9 * max_scale) out.push_back(max_scale);
    return out;
}

}  // namespace scalekit
