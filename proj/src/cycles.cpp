#include "scalekit/cycles.hpp"

#include "scalekit/wavelet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace scalekit {

namespace {

double median(std::vector<double> v) {
    if (v.empty()) throw std::runtime_error("median of empty set");
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + mid, v.end());
    double hi = v[mid];
    if (v.size() % 2 == 0) {
        std::nth_element(v.begin(), v.begin() + mid - 1, v.begin() + mid);
        return 0.5 * (v[mid - 1] + hi);
    }
    return hi;
}

struct BaselineResult {
    ExponentFit fit;
    std::vector<double> residual;   // log10 E - baseline, per grid point
    std::vector<bool> in_baseline;  // point survived the outlier pass
    double resid_median = 0.0;      // over baseline points
    double mad = 0.0;               // over baseline points
};

// Two-pass robust power-law background: fit every positive point, drop
// points more than 2 MADs above the median residual (protrusions stick
// up), refit on the rest.
BaselineResult robust_baseline(const ScalingFunction& sg) {
    validate(sg);
    std::vector<double> lx(sg.size()), ly(sg.size());
    for (std::size_t i = 0; i < sg.size(); ++i) {
        if (!(sg.values[i] > 0.0))
            throw std::runtime_error("cycle baseline: non-positive scalegram value");
        lx[i] = std::log10(sg.scales[i]);
        ly[i] = std::log10(sg.values[i]);
    }
    if (sg.size() < 5)
        throw std::runtime_error("cycle baseline: fewer than 5 grid points");

    ExponentFit pass1 = fit_exponent(sg, sg.scales.front(), sg.scales.back());
    std::vector<double> r1(sg.size());
    for (std::size_t i = 0; i < sg.size(); ++i)
        r1[i] = ly[i] - (pass1.intercept + pass1.exponent * lx[i]);
    const double med1 = median(r1);
    std::vector<double> dev1(sg.size());
    for (std::size_t i = 0; i < sg.size(); ++i) dev1[i] = std::abs(r1[i] - med1);
    const double mad1 = median(dev1);

    BaselineResult out;
    out.in_baseline.assign(sg.size(), true);
    if (mad1 > 0.0) {
        for (std::size_t i = 0; i < sg.size(); ++i)
            if (r1[i] - med1 > 2.0 * mad1) out.in_baseline[i] = false;
    }

    ScalingFunction kept;
    kept.method = sg.method;
    kept.order = sg.order;
    kept.series_name = sg.series_name;
    for (std::size_t i = 0; i < sg.size(); ++i) {
        if (!out.in_baseline[i]) continue;
        kept.scales.push_back(sg.scales[i]);
        kept.values.push_back(sg.values[i]);
    }
    if (kept.size() < 5)
        throw std::runtime_error("cycle baseline: fewer than 5 points after exclusion");
    out.fit = fit_exponent(kept, kept.scales.front(), kept.scales.back());

    out.residual.resize(sg.size());
    std::vector<double> base_resid;
    for (std::size_t i = 0; i < sg.size(); ++i) {
        out.residual[i] = ly[i] - (out.fit.intercept + out.fit.exponent * lx[i]);
        if (out.in_baseline[i]) base_resid.push_back(out.residual[i]);
    }
    out.resid_median = median(base_resid);
    std::vector<double> dev(base_resid.size());
    for (std::size_t i = 0; i < base_resid.size(); ++i)
        dev[i] = std::abs(base_resid[i] - out.resid_median);
    out.mad = median(dev);
    return out;
}

std::size_t nearest_scale_index(const std::vector<double>& scales, double target) {
    std::size_t best = 0;
    double best_d = std::abs(std::log(scales[0] / target));
    for (std::size_t i = 1; i < scales.size(); ++i) {
        const double d = std::abs(std::log(scales[i] / target));
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

}  // namespace

CycleReport detect_cycles(const ScalingFunction& sg_high_order,
                          const ScalingFunction& sg_low_order,
                          double prominence_threshold) {
    if (sg_high_order.size() != sg_low_order.size())
        throw std::invalid_argument("detect_cycles: scale grids differ in length");
    for (std::size_t i = 0; i < sg_high_order.size(); ++i)
        if (std::abs(sg_high_order.scales[i] - sg_low_order.scales[i]) >
            1e-9 * sg_high_order.scales[i])
            throw std::invalid_argument("detect_cycles: scale grids do not match");
    if (!(prominence_threshold > 0.0))
        throw std::invalid_argument("detect_cycles: prominence threshold must be > 0");

    const BaselineResult high = robust_baseline(sg_high_order);
    const BaselineResult low = robust_baseline(sg_low_order);

    CycleReport report;
    report.baseline = high.fit;
    report.residual_mad = high.mad;
    if (!(high.mad > 0.0)) return report;  // exactly power-law input

    const std::vector<double>& r = high.residual;
    const std::vector<double>& scales = sg_high_order.scales;
    const std::size_t k = r.size();
    const int m_high = sg_high_order.order;
    const int m_low = sg_low_order.order;

    struct Peak {
        std::size_t idx;
        double prominence;
        std::size_t lo, hi;  // half-height extent, grid indices
    };
    std::vector<Peak> peaks;
    // interior local maxima over a +-2 neighborhood; the outermost two grid
    // points concentrate baseline-fit edge error and are not eligible
    for (std::size_t i = 2; i + 2 < k; ++i) {
        const double exceed = r[i] - high.resid_median;
        if (exceed / high.mad <= prominence_threshold) continue;
        if (!(r[i] > r[i - 1] && r[i] >= r[i + 1] && r[i] > r[i - 2] && r[i] >= r[i + 2]))
            continue;
        Peak pk;
        pk.idx = i;
        pk.prominence = exceed / high.mad;
        const double half = 0.5 * exceed;
        std::size_t lo = i, hi = i;
        while (lo > 0 && r[lo - 1] - high.resid_median > half) --lo;
        while (hi + 1 < k && r[hi + 1] - high.resid_median > half) ++hi;
        pk.lo = lo;
        pk.hi = hi;
        peaks.push_back(pk);
    }

    // merge peaks whose half-height windows overlap: one bump, one report
    std::vector<Peak> merged;
    for (const Peak& pk : peaks) {
        if (!merged.empty() && pk.lo <= merged.back().hi) {
            if (pk.prominence > merged.back().prominence) {
                const std::size_t lo = std::min(merged.back().lo, pk.lo);
                merged.back() = pk;
                merged.back().lo = lo;
            } else {
                merged.back().hi = std::max(merged.back().hi, pk.hi);
            }
            continue;
        }
        merged.push_back(pk);
    }

    for (const Peak& pk : merged) {
        DetectedCycle c;
        c.scale = scales[pk.idx];
        c.period = dog_scale_to_period(m_high, c.scale);
        c.prominence = pk.prominence;
        c.window_low = dog_scale_to_period(m_high, scales[pk.lo]);
        c.window_high = dog_scale_to_period(m_high, scales[pk.hi]);
        // the same periodic component sits at the low-order wavelet's
        // equivalent scale; compare residual excess there
        const double a_low = dog_period_to_scale(m_low, c.period);
        const std::size_t j = nearest_scale_index(scales, a_low);
        c.low_order_prominence =
            low.mad > 0.0 ? (low.residual[j] - low.resid_median) / low.mad : 0.0;
        report.detected_periods.push_back(c);
    }
    return report;
}

}  // namespace scalekit
