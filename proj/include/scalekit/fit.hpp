#pragma once

#include "scalekit/scaling_function.hpp"

#include <vector>

namespace scalekit {

// Ordinary least-squares line through (log10 scale, log10 value).
struct ExponentFit {
    double exponent = 0.0;   // slope: alpha, H, or beta depending on source
    double intercept = 0.0;  // log10 units
    double fit_min = 0.0;    // scale bounds actually used
    double fit_max = 0.0;
    double slope_stderr = 0.0;
    double r_squared = 0.0;
    Method method = Method::dfa;
    int points = 0;
};

// Fits over the grid points inside [fit_min, fit_max]. Zero values are
// excluded; at least 5 usable points are required.
ExponentFit fit_exponent(const ScalingFunction& sf, double fit_min,
                         double fit_max);

inline double beta_to_alpha(double beta) { return (beta + 1.0) / 2.0; }

// Scales where the local log-log slope jumps by more than
// slope_delta_threshold between the adjacent disjoint windows of `window`
// grid points ending/starting there. Runs of consecutive candidates are
// collapsed to the strongest one.
std::vector<double> detect_crossovers(const ScalingFunction& sf,
                                      int window = 5,
                                      double slope_delta_threshold = 0.15);

}  // namespace scalekit
