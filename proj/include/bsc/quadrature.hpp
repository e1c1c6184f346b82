#pragma once

#include <cstddef>
#include <vector>

namespace bsc {

struct GaussLegendreRule {
    std::vector<double> nodes;    // in (-1, 1), increasing
    std::vector<double> weights;  // positive, sum to 2
};

/// Rule with `points` nodes, exact for polynomials of degree 2*points - 1.
/// Rules are computed once and cached; `points` must be in [1, 64].
const GaussLegendreRule& gauss_legendre(int points);

/// Integrates f over [a, b] with the `points`-node rule.
template <class F>
double integrate(const F& f, double a, double b, int points) {
    const GaussLegendreRule& rule = gauss_legendre(points);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * acc;
}

}  // namespace bsc
