#pragma once

#include "scalekit/grid.hpp"
#include "scalekit/scaling_function.hpp"
#include "scalekit/series.hpp"

#include <span>
#include <vector>

namespace scalekit {

// Detrending kernel of the centered moving-average method: for odd n,
// residual(i) = x(i) - (1/n) * sum_{j=-(n-1)/2}^{(n-1)/2} x(i+j),
// evaluated at the interior positions where the window fits. Returns
// N-n+1 residuals.
std::vector<double> centered_ma_residuals(std::span<const double> x, int n);

// Root-mean-square of the centered moving-average residuals of a profile.
double cdma_sigma(std::span<const double> profile, int n);

// sigma(n) for several odd scales sharing a single prefix-sum pass.
std::vector<double> cdma_sigmas(std::span<const double> profile,
                                const std::vector<int>& scales);

// Centered detrended moving-average fluctuation sigma(n) of the profile of
// the given returns, over odd scales only. Boundary positions where the
// centered window does not fit are excluded.
ScalingFunction dma_fluctuation(const ReturnSeries& returns,
                                const ScaleGrid& grid);

ScalingFunction dma_fluctuation(const ReturnSeries& returns,
                                const std::vector<int>& scales);

}  // namespace scalekit
