#include "scalekit/scaling_function.hpp"

#include <cmath>
#include <stdexcept>

namespace scalekit {

const char* method_name(Method m) {
    switch (m) {
        case Method::dfa: return "dfa";
        case Method::cdma: return "cdma";
        case Method::scalegram: return "scalegram";
        case Method::rescaled_scalegram: return "rescaled-scalegram";
    }
    return "?";
}

void validate(const ScalingFunction& sf) {
    if (sf.scales.size() != sf.values.size())
        throw std::runtime_error("scaling function: scales/values length mismatch");
    for (std::size_t i = 0; i < sf.scales.size(); ++i) {
        if (i > 0 && !(sf.scales[i - 1] < sf.scales[i]))
            throw std::runtime_error("scaling function: scales not strictly ascending");
        if (!std::isfinite(sf.values[i]) || sf.values[i] < 0.0)
            throw std::runtime_error("scaling function: value not finite and >= 0");
    }
}

}  // namespace scalekit
