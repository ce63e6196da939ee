#pragma once

#include "scalekit/grid.hpp"
#include "scalekit/scaling_function.hpp"
#include "scalekit/series.hpp"

#include <vector>

namespace scalekit {

// Detrended fluctuation analysis with maximally overlapping segments
// (stride 1). For each scale n the profile is split into N-n+1 segments of
// length n; a least-squares polynomial of the given order is removed from
// each segment and
//
//   F(n) = sqrt( 1/((N-n+1)*n) * sum_i sum_l y_det_i(l)^2 ).
//
// Scales must satisfy order+2 <= n <= N/4 and the series must hold at
// least 4*min(scales) points.
ScalingFunction dfa_fluctuation(const ReturnSeries& returns, int order,
                                const ScaleGrid& grid);

ScalingFunction dfa_fluctuation(const ReturnSeries& returns, int order,
                                const std::vector<int>& scales);

}  // namespace scalekit
