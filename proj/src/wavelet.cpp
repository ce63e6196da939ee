#include "scalekit/wavelet.hpp"

#include "scalekit/fft.hpp"
#include "scalekit/parallel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace scalekit {

double dog_mother(int order, double eta) {
    if (order < 1) throw std::invalid_argument("dog wavelet: order must be >= 1");
    // d^m/dx^m exp(-x^2/2) = (-1)^m He_m(x) exp(-x^2/2), He_m the
    // probabilists' Hermite polynomial, so
    // psi0(eta) = -He_m(eta) exp(-eta^2/2) / sqrt(Gamma(m+1/2)).
    double hk_prev = 1.0, hk = eta;
    for (int k = 1; k < order; ++k) {
        const double hk_next = eta * hk - k * hk_prev;
        hk_prev = hk;
        hk = hk_next;
    }
    return -hk * std::exp(-0.5 * eta * eta) / std::sqrt(std::tgamma(order + 0.5));
}

double dog_scale_to_period(int order, double scale) {
    return 2.0 * std::numbers::pi * scale / std::sqrt(order + 0.5);
}

double dog_period_to_scale(int order, double period) {
    return period * std::sqrt(order + 0.5) / (2.0 * std::numbers::pi);
}

CwtPlan::CwtPlan(WaveletSpec spec, std::vector<double> scales,
                 std::size_t series_length, CwtPolicy policy)
    : spec_(spec), scales_(std::move(scales)), series_length_(series_length) {
    if (spec_.order < 1) throw std::invalid_argument("cwt: wavelet order must be >= 1");
    if (spec_.support_halfwidth < 4.0)
        throw std::invalid_argument("cwt: support_halfwidth must be >= 4");
    if (scales_.empty()) throw std::invalid_argument("cwt: empty scale list");
    if (series_length_ == 0) throw std::invalid_argument("cwt: empty series");
    for (std::size_t i = 0; i < scales_.size(); ++i) {
        if (!(scales_[i] > 0.0))
            throw std::invalid_argument("cwt: non-positive scale");
        if (scales_[i] < 1.0)
            throw std::invalid_argument("cwt: scales below one sample are not resolvable");
        if (i > 0 && !(scales_[i] > scales_[i - 1]))
            throw std::invalid_argument("cwt: scales must be strictly ascending");
    }

    const std::size_t n_scales = scales_.size();
    kernels_.resize(n_scales);
    kernel_radius_.resize(n_scales);
    long radius_max = 0;
    std::size_t direct_cost = 0;
    for (std::size_t s = 0; s < n_scales; ++s) {
        const double a = scales_[s];
        const long radius = static_cast<long>(std::floor(spec_.support_halfwidth * a));
        kernel_radius_[s] = radius;
        radius_max = std::max(radius_max, radius);
        const double root_a = std::sqrt(a);
        std::vector<double>& g = kernels_[s];
        g.resize(2 * radius + 1);
        for (long d = -radius; d <= radius; ++d)
            g[d + radius] = dog_mother(spec_.order, double(d) / a) / root_a;
        direct_cost += series_length_ * (2 * radius + 1);
    }

    padded_length_ = next_pow2(series_length_ + 2 * static_cast<std::size_t>(radius_max) + 1);
    const double log2m = std::log2(double(padded_length_));
    const double fft_cost = double(n_scales) * 3.0 * double(padded_length_) * log2m;
    use_fft_ = policy == CwtPolicy::fft ||
               (policy == CwtPolicy::automatic && double(direct_cost) > 2.0 * fft_cost);

    if (use_fft_) {
        kernel_fft_.resize(n_scales);
        for (std::size_t s = 0; s < n_scales; ++s) {
            const long radius = kernel_radius_[s];
            std::vector<std::complex<double>> h(padded_length_, {0.0, 0.0});
            // index-reversed kernel: correlation with g becomes convolution
            for (long d = -radius; d <= radius; ++d) {
                const std::size_t j = d <= 0 ? std::size_t(-d)
                                             : padded_length_ - std::size_t(d);
                h[j] = kernels_[s][d + radius];
            }
            fft(h, false);
            kernel_fft_[s] = std::move(h);
        }
    }
}

std::vector<double> CwtPlan::transform_scale_direct(const std::vector<double>& r,
                                                    std::size_t s) const {
    const long N = static_cast<long>(r.size());
    const long radius = kernel_radius_[s];
    const std::vector<double>& g = kernels_[s];
    std::vector<double> w(N);
    for (long b = 0; b < N; ++b) {
        const long d_lo = std::max(-radius, -b);
        const long d_hi = std::min(radius, N - 1 - b);
        double acc = 0.0;
        for (long d = d_lo; d <= d_hi; ++d) acc += r[b + d] * g[d + radius];
        w[b] = acc;
    }
    return w;
}

std::vector<double> CwtPlan::transform_scale_fft(
    const std::vector<std::complex<double>>& signal_fft, std::size_t s) const {
    std::vector<std::complex<double>> prod(padded_length_);
    const auto& hf = kernel_fft_[s];
    for (std::size_t j = 0; j < padded_length_; ++j) prod[j] = signal_fft[j] * hf[j];
    fft(prod, true);
    std::vector<double> w(series_length_);
    for (std::size_t b = 0; b < series_length_; ++b) w[b] = prod[b].real();
    return w;
}

WaveletField CwtPlan::transform(const ReturnSeries& returns) const {
    if (returns.size() != series_length_)
        throw std::invalid_argument("cwt: series length does not match plan");

    WaveletField field;
    field.spec = spec_;
    field.scales = scales_;
    field.translations = series_length_;
    field.series_name = returns.source_name;
    field.coefficients.resize(scales_.size());

    if (use_fft_) {
        std::vector<std::complex<double>> signal_fft(padded_length_, {0.0, 0.0});
        for (std::size_t k = 0; k < series_length_; ++k)
            signal_fft[k] = returns.values[k];
        fft(signal_fft, false);
        parallel_for(0, scales_.size(), [&](std::size_t s) {
            field.coefficients[s] = transform_scale_fft(signal_fft, s);
        }, 1);
    } else {
        parallel_for(0, scales_.size(), [&](std::size_t s) {
            field.coefficients[s] = transform_scale_direct(returns.values, s);
        }, 1);
    }
    return field;
}

WaveletField cwt(const ReturnSeries& returns, const WaveletSpec& spec,
                 const std::vector<double>& scales, CwtPolicy policy) {
    return CwtPlan(spec, scales, returns.size(), policy).transform(returns);
}

ScalingFunction scalegram(const WaveletField& field) {
    if (field.scales.empty() || field.coefficients.empty())
        throw std::invalid_argument("scalegram: empty wavelet field");
    ScalingFunction sf;
    sf.method = Method::scalegram;
    sf.order = field.spec.order;
    sf.series_name = field.series_name;
    sf.scales = field.scales;
    sf.values.resize(field.scales.size());
    const long N = static_cast<long>(field.translations);
    for (std::size_t s = 0; s < field.scales.size(); ++s) {
        long b_lo = 0, b_hi = N;
        if (field.spec.exclude_cone_of_influence) {
            const long margin =
                static_cast<long>(std::ceil(field.spec.support_halfwidth * field.scales[s]));
            b_lo = margin;
            b_hi = N - margin;
            if (b_lo >= b_hi)
                throw std::runtime_error(
                    "scalegram: cone of influence excludes every translation at scale " +
                    std::to_string(field.scales[s]));
        }
        const std::vector<double>& row = field.coefficients[s];
        long double acc = 0.0L;
        for (long b = b_lo; b < b_hi; ++b)
            acc += static_cast<long double>(row[b]) * row[b];
        sf.values[s] = static_cast<double>(acc);
    }
    return sf;
}

ScalingFunction rescale_scalegram(const ScalingFunction& sg) {
    if (sg.method != Method::scalegram)
        throw std::invalid_argument("rescale_scalegram: input must be a scalegram");
    ScalingFunction out = sg;
    out.method = Method::rescaled_scalegram;
    for (std::size_t i = 0; i < sg.values.size(); ++i) {
        if (!(sg.values[i] > 0.0))
            throw std::runtime_error(
                "rescale_scalegram: non-positive power at scale " +
                std::to_string(sg.scales[i]) + " (degenerate input series)");
        out.values[i] = std::sqrt(sg.scales[i] * sg.values[i]);
    }
    return out;
}

}  // namespace scalekit
