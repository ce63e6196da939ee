#include "scalekit/dfa.hpp"

#include "scalekit/parallel.hpp"

#include <cmath>
#include <stdexcept>

namespace scalekit {

namespace {

// Orthonormal basis (standard dot product) of the polynomials of degree
// <= order on the abscissa 1..n. Built by modified Gram-Schmidt with one
// re-orthogonalization pass, on the rescaled abscissa t in [-1,1]; the
// span equals that of 1, l, ..., l^order on 1..n.
std::vector<std::vector<double>> poly_basis(int n, int order) {
    const int m = order + 1;
    std::vector<std::vector<double>> q(m, std::vector<double>(n));
    std::vector<double> t(n);
    for (int l = 0; l < n; ++l)
        t[l] = n > 1 ? (2.0 * l - (n - 1)) / (n - 1) : 0.0;
    for (int k = 0; k < m; ++k) {
        std::vector<double>& v = q[k];
        for (int l = 0; l < n; ++l) v[l] = std::pow(t[l], k);
        for (int pass = 0; pass < 2; ++pass) {
            for (int r = 0; r < k; ++r) {
                double dot = 0.0;
                for (int l = 0; l < n; ++l) dot += q[r][l] * v[l];
                for (int l = 0; l < n; ++l) v[l] -= dot * q[r][l];
            }
        }
        double norm = 0.0;
        for (int l = 0; l < n; ++l) norm += v[l] * v[l];
        norm = std::sqrt(norm);
        if (!(norm > 0.0))
            throw std::runtime_error("dfa: degenerate polynomial basis");
        for (int l = 0; l < n; ++l) v[l] /= norm;
    }
    return q;
}

}  // namespace

ScalingFunction dfa_fluctuation(const ReturnSeries& returns, int order,
                                const std::vector<int>& scales) {
    if (order < 1) throw std::invalid_argument("dfa: order must be >= 1");
    if (scales.empty()) throw std::invalid_argument("dfa: empty scale list");
    const std::size_t n_points = returns.size();
    for (std::size_t i = 0; i < scales.size(); ++i) {
        if (i > 0 && scales[i] <= scales[i - 1])
            throw std::invalid_argument("dfa: scales must be strictly ascending");
        if (scales[i] < order + 2)
            throw std::invalid_argument("dfa: scale " + std::to_string(scales[i]) +
                                        " below order+2 = " + std::to_string(order + 2));
        if (static_cast<std::size_t>(scales[i]) * 4 > n_points)
            throw std::invalid_argument("dfa: scale " + std::to_string(scales[i]) +
                                        " exceeds N/4 for series of length " +
                                        std::to_string(n_points));
    }
    if (n_points < static_cast<std::size_t>(4 * scales.front()))
        throw std::invalid_argument("dfa: series shorter than 4*min_scale");

    const Profile prof = build_profile(returns);
    const std::vector<double>& y = prof.values;
    const long N = static_cast<long>(y.size());

    ScalingFunction sf;
    sf.method = Method::dfa;
    sf.order = order;
    sf.series_name = returns.source_name;
    sf.scales.assign(scales.begin(), scales.end());
    sf.values.resize(scales.size());

    parallel_for(0, scales.size(), [&](std::size_t si) {
        const int n = scales[si];
        const auto basis = poly_basis(n, order);
        const int nb = static_cast<int>(basis.size());
        const long n_seg = N - n + 1;
        std::vector<double> coeff(nb);
        long double total = 0.0L;
        for (long i = 0; i < n_seg; ++i) {
            const double* seg = y.data() + i;
            for (int k = 0; k < nb; ++k) {
                double dot = 0.0;
                const double* qk = basis[k].data();
                for (int l = 0; l < n; ++l) dot += qk[l] * seg[l];
                coeff[k] = dot;
            }
            double rss = 0.0;
            for (int l = 0; l < n; ++l) {
                double fitted = 0.0;
                for (int k = 0; k < nb; ++k) fitted += coeff[k] * basis[k][l];
                const double r = seg[l] - fitted;
                rss += r * r;
            }
            total += rss;
        }
        sf.values[si] = std::sqrt(static_cast<double>(
            total / (static_cast<long double>(n_seg) * n)));
    }, 1);

    return sf;
}

ScalingFunction dfa_fluctuation(const ReturnSeries& returns, int order,
                                const ScaleGrid& grid) {
    if (grid.min_scale < order + 2)
        throw std::invalid_argument("dfa: grid min_scale below order+2");
    return dfa_fluctuation(returns, order, integer_scales(grid));
}

}  // namespace scalekit
