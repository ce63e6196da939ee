#pragma once

#include <vector>

namespace scalekit {

// Logarithmically spaced scale grid for the detrending estimators.
struct ScaleGrid {
    int min_scale = 4;
    int max_scale = 500;
    int points_per_decade = 40;
};

// Log-spaced integers in [min_scale, max_scale], rounded and deduplicated.
std::vector<int> integer_scales(const ScaleGrid& grid);

// Same, with every scale rounded to the nearest odd integer >= 3; the
// centered moving-average window requires odd lengths.
std::vector<int> odd_scales(const ScaleGrid& grid);

// Real-valued log-spaced scales for wavelet analysis.
std::vector<double> log_spaced_scales(double min_scale, double max_scale,
                                      int voices_per_octave);

}  // namespace scalekit
