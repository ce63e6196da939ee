#include "scalekit/series.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace scalekit {

void validate(const PriceSeries& prices) {
    if (prices.closes.size() != prices.dates.size())
        throw std::runtime_error("price series '" + prices.name +
                                 "': dates/closes length mismatch");
    if (prices.size() < 2)
        throw std::runtime_error("price series '" + prices.name +
                                 "': need at least 2 rows, got " +
                                 std::to_string(prices.size()));
    for (std::size_t i = 0; i < prices.size(); ++i) {
        if (!(prices.closes[i] > 0.0) || !std::isfinite(prices.closes[i]))
            throw std::runtime_error("price series '" + prices.name +
                                     "': non-positive close at row " +
                                     std::to_string(i + 1));
        if (i > 0 && !(prices.dates[i - 1] < prices.dates[i])) {
            const bool dup = prices.dates[i - 1] == prices.dates[i];
            throw std::runtime_error("price series '" + prices.name + "': " +
                                     (dup ? "duplicate date " : "non-increasing date ") +
                                     format_date(prices.dates[i]) + " at row " +
                                     std::to_string(i + 1));
        }
    }
}

ReturnSeries log_returns(const PriceSeries& prices) {
    validate(prices);
    ReturnSeries rs;
    rs.source_name = prices.name;
    rs.values.resize(prices.size() - 1);
    for (std::size_t k = 0; k + 1 < prices.size(); ++k)
        rs.values[k] = std::log(prices.closes[k + 1] / prices.closes[k]);
    return rs;
}

Profile build_profile(const ReturnSeries& returns) {
    if (returns.values.empty())
        throw std::runtime_error("cannot build profile of an empty return series");
    return build_profile(std::span<const double>(returns.values));
}

Profile build_profile(std::span<const double> returns) {
    if (returns.empty())
        throw std::runtime_error("cannot build profile of an empty return series");
    Profile p;
    double mean = 0.0;
    for (double r : returns) mean += r;
    mean /= static_cast<double>(returns.size());
    p.mean_removed = mean;
    p.values.resize(returns.size());
    double acc = 0.0;
    for (std::size_t l = 0; l < returns.size(); ++l) {
        acc += returns[l] - mean;
        p.values[l] = acc;
    }
    return p;
}

std::string format_date(Date d) {
    const std::chrono::year_month_day ymd{d};
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", int(ymd.year()),
                  unsigned(ymd.month()), unsigned(ymd.day()));
    return buf;
}

}  // namespace scalekit
