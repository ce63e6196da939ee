#pragma once

#include "scalekit/scaling_function.hpp"
#include "scalekit/series.hpp"

#include <complex>
#include <vector>

namespace scalekit {

// Derivative-of-Gaussian wavelet family.
struct WaveletSpec {
    int order = 1;                          // derivative order m >= 1
    double support_halfwidth = 8.0;         // truncation radius in units of a
    bool exclude_cone_of_influence = false; // drop edge-affected translations
                                            // from the scalegram (default off)
};

// Mother wavelet psi0(eta) = (-1)^(m+1)/sqrt(Gamma(m+1/2)) * d^m/deta^m
// exp(-eta^2/2), evaluated through the Hermite closed form.
double dog_mother(int order, double eta);

// Wavelength equivalent to wavelet scale a for the DOG family:
// lambda = 2*pi*a / sqrt(m + 1/2).
double dog_scale_to_period(int order, double scale);
double dog_period_to_scale(int order, double period);

struct WaveletField {
    WaveletSpec spec;
    std::vector<double> scales;
    std::size_t translations = 0;
    // coefficients[s][b] = W(a_s, b), b = 0..N-1
    std::vector<std::vector<double>> coefficients;
    std::string series_name;
};

enum class CwtPolicy {
    direct,     // reference path: per-coefficient summation
    fft,        // circular-convolution fast path
    automatic,  // fft for large scale*length products, direct otherwise
};

// Precomputes sampled kernels (and their transforms) for a fixed spec,
// scale set, and series length, so repeated transforms share the setup.
class CwtPlan {
  public:
    CwtPlan(WaveletSpec spec, std::vector<double> scales,
            std::size_t series_length, CwtPolicy policy = CwtPolicy::automatic);

    WaveletField transform(const ReturnSeries& returns) const;

    const std::vector<double>& scales() const { return scales_; }
    bool uses_fft() const { return use_fft_; }

  private:
    WaveletSpec spec_;
    std::vector<double> scales_;
    std::size_t series_length_;
    bool use_fft_;
    std::size_t padded_length_ = 0;
    // direct path: kernel[s][d + halfwidth_s] = psi_{a_s}(d)
    std::vector<std::vector<double>> kernels_;
    std::vector<long> kernel_radius_;
    // fft path: transform of the index-reversed kernel
    std::vector<std::vector<std::complex<double>>> kernel_fft_;

    std::vector<double> transform_scale_direct(const std::vector<double>& r,
                                               std::size_t s) const;
    std::vector<double> transform_scale_fft(
        const std::vector<std::complex<double>>& signal_fft,
        std::size_t s) const;
};

// W(a,b) = sum_k R(k) * (1/sqrt(a)) * psi0((k-b)/a), b = 0..N-1.
WaveletField cwt(const ReturnSeries& returns, const WaveletSpec& spec,
                 const std::vector<double>& scales,
                 CwtPolicy policy = CwtPolicy::automatic);

// E_W(a) = sum_b W(a,b)^2. When the field was computed with
// exclude_cone_of_influence set, translations closer than
// support_halfwidth*a to either edge are skipped.
ScalingFunction scalegram(const WaveletField& field);

// G(a) = sqrt(a * E_W(a)); if E_W ~ a^beta then G ~ a^((beta+1)/2), so the
// log-log slope of G is directly comparable to the DFA/cDMA exponents.
// Throws if any scalegram value is not strictly positive.
ScalingFunction rescale_scalegram(const ScalingFunction& sg);

}  // namespace scalekit
