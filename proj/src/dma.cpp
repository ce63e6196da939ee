#include "scalekit/dma.hpp"

#include <cmath>
#include <stdexcept>

namespace scalekit {

namespace {

void check_scale(int n, std::size_t series_len) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("cdma: scale " + std::to_string(n) +
                                    " must be odd and >= 3");
    if (series_len < static_cast<std::size_t>(n))
        throw std::invalid_argument("cdma: window longer than series");
}

std::vector<long double> prefix_sums(std::span<const double> x) {
    std::vector<long double> prefix(x.size() + 1, 0.0L);
    for (std::size_t i = 0; i < x.size(); ++i) prefix[i + 1] = prefix[i] + x[i];
    return prefix;
}

double sigma_from_prefix(std::span<const double> x,
                         const std::vector<long double>& prefix, int n) {
    const long N = static_cast<long>(x.size());
    const int h = (n - 1) / 2;
    long double acc = 0.0L;
    for (long i = h; i < N - h; ++i) {
        const double ma = static_cast<double>((prefix[i + h + 1] - prefix[i - h]) / n);
        const double r = x[i] - ma;
        acc += static_cast<long double>(r) * r;
    }
    return std::sqrt(static_cast<double>(acc / (N - n + 1)));
}

}  // namespace

std::vector<double> centered_ma_residuals(std::span<const double> x, int n) {
    check_scale(n, x.size());
    const long N = static_cast<long>(x.size());
    const int h = (n - 1) / 2;
    const auto prefix = prefix_sums(x);
    std::vector<double> res(N - n + 1);
    for (long i = h; i < N - h; ++i) {
        const double ma = static_cast<double>((prefix[i + h + 1] - prefix[i - h]) / n);
        res[i - h] = x[i] - ma;
    }
    return res;
}

double cdma_sigma(std::span<const double> profile, int n) {
    check_scale(n, profile.size());
    return sigma_from_prefix(profile, prefix_sums(profile), n);
}

std::vector<double> cdma_sigmas(std::span<const double> profile,
                                const std::vector<int>& scales) {
    const auto prefix = prefix_sums(profile);
    std::vector<double> out(scales.size());
    for (std::size_t i = 0; i < scales.size(); ++i) {
        check_scale(scales[i], profile.size());
        out[i] = sigma_from_prefix(profile, prefix, scales[i]);
    }
    return out;
}

namespace {

ScalingFunction dma_impl(const ReturnSeries& returns, const std::vector<int>& scales) {
    if (scales.empty()) throw std::invalid_argument("cdma: empty scale list");
    const std::size_t n_points = returns.size();
    for (std::size_t i = 0; i < scales.size(); ++i) {
        if (i > 0 && scales[i] <= scales[i - 1])
            throw std::invalid_argument("cdma: scales must be strictly ascending");
        check_scale(scales[i], n_points);
        if (static_cast<std::size_t>(scales[i]) * 4 > n_points)
            throw std::invalid_argument("cdma: scale " + std::to_string(scales[i]) +
                                        " exceeds N/4 for series of length " +
                                        std::to_string(n_points));
    }
    if (n_points < static_cast<std::size_t>(4 * scales.front()))
        throw std::invalid_argument("cdma: series shorter than 4*min_scale");

    const Profile prof = build_profile(returns);

    ScalingFunction sf;
    sf.method = Method::cdma;
    sf.order = 0;
    sf.series_name = returns.source_name;
    sf.scales.assign(scales.begin(), scales.end());
    sf.values = cdma_sigmas(prof.values, scales);
    return sf;
}

}  // namespace

ScalingFunction dma_fluctuation(const ReturnSeries& returns,
                                const std::vector<int>& scales) {
    return dma_impl(returns, scales);
}

ScalingFunction dma_fluctuation(const ReturnSeries& returns, const ScaleGrid& grid) {
    return dma_impl(returns, odd_scales(grid));
}

}  // namespace scalekit
