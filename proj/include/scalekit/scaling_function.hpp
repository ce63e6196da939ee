#pragma once

#include <string>
#include <vector>

namespace scalekit {

enum class Method { dfa, cdma, scalegram, rescaled_scalegram };

const char* method_name(Method m);

// A (scale, value) curve: DFA F(n), cDMA sigma(n), or a scalegram E_W(a).
// Scales are strictly ascending, values finite and non-negative.
struct ScalingFunction {
    Method method = Method::dfa;
    int order = 0;  // detrending polynomial order or wavelet order
    std::vector<double> scales;
    std::vector<double> values;
    std::string series_name;

    std::size_t size() const { return scales.size(); }
};

// Throws std::runtime_error on invariant violation.
void validate(const ScalingFunction& sf);

}  // namespace scalekit
