#pragma once

#include <chrono>
#include <span>
#include <string>
#include <vector>

namespace scalekit {

using Date = std::chrono::sys_days;

// Daily closing values S(t). Dates are trading days; calendar gaps are
// allowed and consecutive rows always count as a lag of one step.
struct PriceSeries {
    std::vector<Date> dates;
    std::vector<double> closes;
    std::string name;

    std::size_t size() const { return closes.size(); }
};

// Logarithmic returns R(k) = ln(S(k+1)/S(k)), k = 0..N-2.
struct ReturnSeries {
    std::vector<double> values;
    std::string source_name;

    std::size_t size() const { return values.size(); }
};

// Integrated series y(l) = sum_{k<=l} (R(k) - R_ave). The final element
// telescopes to zero up to accumulation round-off.
struct Profile {
    std::vector<double> values;
    double mean_removed = 0.0;
};

// Throws std::runtime_error if dates are not strictly increasing, any
// close is non-positive, or fewer than two rows are present.
void validate(const PriceSeries& prices);

ReturnSeries log_returns(const PriceSeries& prices);

Profile build_profile(const ReturnSeries& returns);

// Window variant used by sliding-window analyses: the mean is taken over
// the span itself, so each window is treated as a standalone series.
Profile build_profile(std::span<const double> returns);

std::string format_date(Date d);

}  // namespace scalekit
