#include "scalekit/fit.hpp"

#include <cmath>
#include <stdexcept>

namespace scalekit {

namespace {

struct LinePoints {
    std::vector<double> x, y;  // log10 scale, log10 value
    std::vector<std::size_t> idx;
};

LinePoints log_points(const ScalingFunction& sf, double lo, double hi) {
    LinePoints p;
    for (std::size_t i = 0; i < sf.size(); ++i) {
        if (sf.scales[i] < lo || sf.scales[i] > hi) continue;
        if (!(sf.values[i] > 0.0)) continue;  // zero values carry no slope
        p.x.push_back(std::log10(sf.scales[i]));
        p.y.push_back(std::log10(sf.values[i]));
        p.idx.push_back(i);
    }
    return p;
}

struct Line {
    double slope, intercept;
};

Line ols(const std::vector<double>& x, const std::vector<double>& y,
         std::size_t lo, std::size_t hi) {
    const std::size_t n = hi - lo;
    double mx = 0.0, my = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (!(sxx > 0.0)) throw std::runtime_error("fit: degenerate abscissa");
    const double slope = sxy / sxx;
    return {slope, my - slope * mx};
}

}  // namespace

ExponentFit fit_exponent(const ScalingFunction& sf, double fit_min, double fit_max) {
    if (!(fit_min < fit_max))
        throw std::invalid_argument("fit: need fit_min < fit_max");
    const LinePoints p = log_points(sf, fit_min, fit_max);
    if (p.x.size() < 5)
        throw std::runtime_error(
            "fit: fewer than 5 positive points inside [" +
            std::to_string(fit_min) + ", " + std::to_string(fit_max) + "] (got " +
            std::to_string(p.x.size()) + ")");

    const std::size_t n = p.x.size();
    const Line line = ols(p.x, p.y, 0, n);

    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += p.x[i];
        my += p.y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sst = 0.0, sse = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (p.x[i] - mx) * (p.x[i] - mx);
        sst += (p.y[i] - my) * (p.y[i] - my);
        const double r = p.y[i] - (line.intercept + line.slope * p.x[i]);
        sse += r * r;
    }

    ExponentFit fit;
    fit.exponent = line.slope;
    fit.intercept = line.intercept;
    fit.fit_min = sf.scales[p.idx.front()];
    fit.fit_max = sf.scales[p.idx.back()];
    fit.slope_stderr = std::sqrt(std::max(0.0, sse / double(n - 2)) / sxx);
    fit.r_squared = sst > 0.0 ? std::max(0.0, 1.0 - sse / sst)
                              : 1.0;  // flat exact data: the line is exact
    fit.method = sf.method;
    fit.points = static_cast<int>(n);
    return fit;
}

std::vector<double> detect_crossovers(const ScalingFunction& sf, int window,
                                      double slope_delta_threshold) {
    if (window < 2) throw std::invalid_argument("crossovers: window must be >= 2");
    const LinePoints p = log_points(sf, -1e300, 1e300);
    const std::size_t k = p.x.size();
    if (k < static_cast<std::size_t>(3 * window))
        throw std::invalid_argument("crossovers: need at least 3*window grid points");

    const std::size_t w = static_cast<std::size_t>(window);
    // slope change between the disjoint windows [j-w+1, j] and [j+1, j+w]
    std::vector<double> delta(k, 0.0);
    std::vector<bool> candidate(k, false);
    for (std::size_t j = w - 1; j + w < k; ++j) {
        const double left = ols(p.x, p.y, j - w + 1, j + 1).slope;
        const double right = ols(p.x, p.y, j + 1, j + w + 1).slope;
        delta[j] = right - left;
        candidate[j] = std::abs(delta[j]) > slope_delta_threshold;
    }

    // one crossover per run of consecutive candidates: keep the strongest
    std::vector<double> out;
    std::size_t j = 0;
    while (j < k) {
        if (!candidate[j]) {
            ++j;
            continue;
        }
        std::size_t best = j;
        while (j < k && candidate[j]) {
            if (std::abs(delta[j]) > std::abs(delta[best])) best = j;
            ++j;
        }
        out.push_back(std::sqrt(sf.scales[p.idx[best]] * sf.scales[p.idx[best + 1]]));
    }
    return out;
}

}  // namespace scalekit
