#pragma once

#include "scalekit/fit.hpp"
#include "scalekit/scaling_function.hpp"

#include <vector>

namespace scalekit {

// A periodic-like trend detected as a protrusion of a high-order wavelet
// scalegram above its power-law baseline.
struct DetectedCycle {
    double period = 0.0;       // headline period: scale converted through
                               // the DOG wavelength relation
    double scale = 0.0;        // raw protrusion scale a*
    double prominence = 0.0;   // log-residual excess in MAD units
    double low_order_prominence = 0.0;  // same measure on the low-order
                                        // scalegram at the matching scale
    double window_low = 0.0;   // half-height extent, period units
    double window_high = 0.0;
};

struct CycleReport {
    std::vector<DetectedCycle> detected_periods;
    ExponentFit baseline;        // power-law background of the high-order
                                 // scalegram, bump regions excluded
    double residual_mad = 0.0;   // MAD of the baseline log-residuals
    std::vector<double> crossover_scales;  // filled by the caller from a
                                           // detrending-method curve
};

// Default peak threshold in residual-MAD units; calibrated so that 100
// white-noise series of length 10000 produce no detection (see tests).
inline constexpr double kDefaultCycleProminence = 3.0;

// Detects protrusions of the high-order scalegram over a robust two-pass
// power-law baseline (fit all points, drop >2 MAD outliers, refit). Local
// maxima of the log-residual above prominence_threshold MADs are reported
// with their period equivalents; the low-order scalegram, computed on the
// same scale grid, provides the magnification comparison at each peak.
CycleReport detect_cycles(const ScalingFunction& sg_high_order,
                          const ScalingFunction& sg_low_order,
                          double prominence_threshold = kDefaultCycleProminence);

}  // namespace scalekit
