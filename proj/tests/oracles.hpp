// Independent reference implementations used to pin expected values.
// Everything here is written from the defining formulas with plain loops
// and normal equations, deliberately sharing no code with the library
// paths it checks.
#pragma once

#include "scalekit/series.hpp"
#include "scalekit/wavelet.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace oracles {

// Profile by explicit two-pass loop.
std::vector<double> brute_profile(const std::vector<double>& returns);

// DFA F(n): every overlapping segment, polynomial fit on abscissa 1..n by
// normal equations (long double, Gaussian elimination), explicit residual
// accumulation.
double brute_dfa(const std::vector<double>& returns, int order, int n);

// cDMA sigma(n): explicit window sums at every interior position.
double brute_cdma(const std::vector<double>& returns, int n);

// Mother wavelet via a symbolically built Hermite coefficient table and
// Horner evaluation, normalized with lgamma.
double brute_dog(int order, double eta);

// Single CWT coefficient by a per-index loop over the truncated support.
double brute_cwt_coeff(const std::vector<double>& returns,
                       const scalekit::WaveletSpec& spec, double scale,
                       long translation);

// O(n^2) discrete Fourier transform.
std::vector<std::complex<double>> naive_dft(
    const std::vector<std::complex<double>>& x, bool inverse);

// Sample autocorrelation at lag tau.
double autocorrelation(const std::vector<double>& x, std::size_t tau);

// Hurst exponent from autocorrelation decay: fit log10 r(tau) against
// log10 tau over [tau_lo, tau_hi] (positive r only) and map the slope s
// through H = 1 + s/2. Returns NaN when fewer than 4 lags are usable.
double acf_hurst(const std::vector<double>& mean_acf, std::size_t tau_lo,
                 std::size_t tau_hi);

double mean(const std::vector<double>& v);
double sample_std(const std::vector<double>& v);

}  // namespace oracles
