#include "bsc/quadrature.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace bsc {

namespace {

// P_p(x) and P_p'(x) by the three-term recurrence.
std::pair<double, double> legendre_with_derivative(int p, double x) {
    double pm1 = 1.0, pm0 = x;
    for (int k = 2; k <= p; ++k) {
        double pk = ((2 * k - 1) * x * pm0 - (k - 1) * pm1) / k;
        pm1 = pm0;
        pm0 = pk;
    }
    double deriv = p * (x * pm0 - pm1) / (x * x - 1.0);
    return {pm0, deriv};
}

GaussLegendreRule build_rule(int p) {
    GaussLegendreRule rule;
    rule.nodes.resize(p);
    rule.weights.resize(p);
    if (p == 1) {
        rule.nodes[0] = 0.0;
        rule.weights[0] = 2.0;
        return rule;
    }
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < (p + 1) / 2; ++i) {
        double x = -std::cos(pi * (i + 0.75) / (p + 0.5));
        for (int it = 0; it < 100; ++it) {
            auto [val, deriv] = legendre_with_derivative(p, x);
            double dx = val / deriv;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        auto [val, deriv] = legendre_with_derivative(p, x);
        (void)val;
        double w = 2.0 / ((1.0 - x * x) * deriv * deriv);
        rule.nodes[i] = x;
        rule.weights[i] = w;
        rule.nodes[p - 1 - i] = -x;
        rule.weights[p - 1 - i] = w;
    }
    if (p % 2 == 1) rule.nodes[p / 2] = 0.0;
    return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int points) {
    if (points < 1 || points > 64) throw std::invalid_argument("gauss_legendre: points out of range");
    static std::mutex mu;
    static std::vector<GaussLegendreRule> cache(65);
    std::lock_guard<std::mutex> lock(mu);
    GaussLegendreRule& slot = cache[points];
    if (slot.nodes.empty()) slot = build_rule(points);
    return slot;
}

}  // namespace bsc
