#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace scalekit {

// In-place radix-2 complex FFT. Length must be a power of two.
// inverse = true applies the conjugate transform and divides by n.
void fft(std::vector<std::complex<double>>& data, bool inverse);

std::size_t next_pow2(std::size_t n);

}  // namespace scalekit
