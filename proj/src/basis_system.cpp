#include "bsc/basis_system.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bsc/quadrature.hpp"

namespace bsc {

namespace {

int rule_points(int degree, int extra_power) {
    // Exact for integrands of degree `degree + extra_power`.
    return (degree + extra_power) / 2 + 1;
}

// Stack scratch for the degree+1 active basis values.
struct LocalValues {
    static constexpr int kStack = 24;
    double buf[kStack];
    std::vector<double> heap;
    std::span<double> get(int count) {
        if (count <= kStack) return {buf, static_cast<std::size_t>(count)};
        heap.resize(static_cast<std::size_t>(count));
        return {heap.data(), heap.size()};
    }
};

}  // namespace

BasisSystem::BasisSystem(KnotVector knots) : knots_(std::move(knots)) {
    const int d = knots_.degree();
    const int m = knots_.spans();
    const int n = knots_.basis_count();
    weights_.assign(static_cast<std::size_t>(n), 0.0);
    first_moments_.assign(static_cast<std::size_t>(n), 0.0);
    cumulative_.assign(static_cast<std::size_t>((m + 1) * n), 0.0);

    const GaussLegendreRule& rule = gauss_legendre(rule_points(d, 1));
    std::vector<double> vals(static_cast<std::size_t>(d + 1));
    for (int j = 0; j < m; ++j) {
        const double a = knots_.breakpoint(j);
        const double b = knots_.breakpoint(j + 1);
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        std::vector<double> span_q(static_cast<std::size_t>(d + 1), 0.0);
        for (std::size_t g = 0; g < rule.nodes.size(); ++g) {
            const double t = mid + half * rule.nodes[g];
            const double w = half * rule.weights[g];
            nonzero_bspline_values(knots_, t, vals);
            for (int aidx = 0; aidx <= d; ++aidx) {
                const double nv = vals[static_cast<std::size_t>(aidx)];
                span_q[static_cast<std::size_t>(aidx)] += w * nv;
                first_moments_[static_cast<std::size_t>(j + aidx)] += w * t * nv;
            }
        }
        double* next = cumulative_.data() + static_cast<std::size_t>((j + 1) * n);
        const double* prev = cumulative_.data() + static_cast<std::size_t>(j * n);
        std::copy(prev, prev + n, next);
        for (int aidx = 0; aidx <= d; ++aidx) {
            weights_[static_cast<std::size_t>(j + aidx)] += span_q[static_cast<std::size_t>(aidx)];
            next[j + aidx] += span_q[static_cast<std::size_t>(aidx)];
        }
    }

    means_.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        means_[static_cast<std::size_t>(k)] =
            first_moments_[static_cast<std::size_t>(k)] / weights_[static_cast<std::size_t>(k)];
}

void BasisSystem::check_index(int k) const {
    if (k < 0 || k >= size()) throw std::invalid_argument("BasisSystem: basis index out of range");
}

double BasisSystem::density(int k, double t) const {
    check_index(k);
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("BasisSystem: t outside [0,1]");
    const int d = knots_.degree();
    const int j = knots_.find_span(t);
    if (k < j || k > j + d) return 0.0;
    LocalValues scratch;
    std::span<double> vals = scratch.get(d + 1);
    nonzero_bspline_values(knots_, t, vals);
    return vals[static_cast<std::size_t>(k - j)] / weights_[static_cast<std::size_t>(k)];
}

void BasisSystem::partial_span_integrals(int j, double u, std::span<double> vals) const {
    const int d = knots_.degree();
    std::fill(vals.begin(), vals.end(), 0.0);
    const double a = knots_.breakpoint(j);
    if (u <= a) return;
    const GaussLegendreRule& rule = gauss_legendre(rule_points(d, 0));
    const double mid = 0.5 * (a + u), half = 0.5 * (u - a);
    LocalValues scratch;
    std::span<double> nv = scratch.get(d + 1);
    for (std::size_t g = 0; g < rule.nodes.size(); ++g) {
        const double t = mid + half * rule.nodes[g];
        nonzero_bspline_values(knots_, t, nv);
        const double w = half * rule.weights[g];
        for (int aidx = 0; aidx <= d; ++aidx)
            vals[static_cast<std::size_t>(aidx)] += w * nv[static_cast<std::size_t>(aidx)];
    }
}

double BasisSystem::cdf(int k, double u) const {
    check_index(k);
    if (u < 0.0 || u > 1.0) throw std::invalid_argument("BasisSystem: u outside [0,1]");
    const int d = knots_.degree();
    const int n = size();
    const int j = (u >= 1.0) ? knots_.spans() : knots_.find_span(u);
    double acc = cumulative_[static_cast<std::size_t>(j * n + k)];
    if (j < knots_.spans() && k >= j && k <= j + d) {
        LocalValues scratch;
        std::span<double> part = scratch.get(d + 1);
        partial_span_integrals(j, u, part);
        acc += part[static_cast<std::size_t>(k - j)];
    }
    return acc / weights_[static_cast<std::size_t>(k)];
}

double BasisSystem::inverse_cdf(int k, double p) const {
    check_index(k);
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("BasisSystem: p outside [0,1]");
    auto [lo, hi] = support(k);
    if (p <= 0.0) return lo;
    if (p >= 1.0) return hi;
    // Phi is continuous and strictly increasing inside the support, so
    // bracketing bisection converges; ties resolve leftward because equality
    // moves the upper bracket.
    for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double f = cdf(k, mid);
        if (std::abs(f - p) <= 1e-12) return mid;
        if (f < p)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

void BasisSystem::density_row(double t, std::span<double> out) const {
    const int d = knots_.degree();
    const int n = size();
    if (out.size() < static_cast<std::size_t>(n))
        throw std::invalid_argument("BasisSystem: output too small");
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("BasisSystem: t outside [0,1]");
    std::fill(out.begin(), out.begin() + n, 0.0);
    LocalValues scratch;
    std::span<double> vals = scratch.get(d + 1);
    const int j = nonzero_bspline_values(knots_, t, vals);
    for (int aidx = 0; aidx <= d; ++aidx)
        out[static_cast<std::size_t>(j + aidx)] =
            vals[static_cast<std::size_t>(aidx)] / weights_[static_cast<std::size_t>(j + aidx)];
}

void BasisSystem::cdf_row(double u, std::span<double> out) const {
    const int d = knots_.degree();
    const int n = size();
    if (out.size() < static_cast<std::size_t>(n))
        throw std::invalid_argument("BasisSystem: output too small");
    if (u < 0.0 || u > 1.0) throw std::invalid_argument("BasisSystem: u outside [0,1]");
    const int j = (u >= 1.0) ? knots_.spans() : knots_.find_span(u);
    const double* base = cumulative_.data() + static_cast<std::size_t>(j * n);
    for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = base[k];
    if (j < knots_.spans()) {
        LocalValues scratch;
        std::span<double> part = scratch.get(d + 1);
        partial_span_integrals(j, u, part);
        for (int aidx = 0; aidx <= d; ++aidx) out[static_cast<std::size_t>(j + aidx)] += part[static_cast<std::size_t>(aidx)];
    }
    for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] /= weights_[static_cast<std::size_t>(k)];
}

std::pair<double, double> BasisSystem::support(int k) const {
    check_index(k);
    const int d = knots_.degree();
    const int i = k - d;  // signed index of N^d_i
    return {knots_.knot(i), knots_.knot(i + d + 1)};
}

double BasisSystem::power_moment(int k, int power) const {
    check_index(k);
    if (power < 0) throw std::invalid_argument("BasisSystem: power must be >= 0");
    const int d = knots_.degree();
    const GaussLegendreRule& rule = gauss_legendre(rule_points(d, power + 1));
    LocalValues scratch;
    std::span<double> vals = scratch.get(d + 1);
    double acc = 0.0;
    // phi_k lives on spans max(k-d,0) .. min(k, m-1).
    const int j0 = std::max(k - d, 0);
    const int j1 = std::min(k, knots_.spans() - 1);
    for (int j = j0; j <= j1; ++j) {
        const double a = knots_.breakpoint(j);
        const double b = knots_.breakpoint(j + 1);
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (std::size_t g = 0; g < rule.nodes.size(); ++g) {
            const double t = mid + half * rule.nodes[g];
            nonzero_bspline_values(knots_, t, vals);
            acc += half * rule.weights[g] * std::pow(t, power) * vals[static_cast<std::size_t>(k - j)];
        }
    }
    return acc;
}

std::pair<std::vector<double>, std::vector<double>> closed_form_basis_integrals(int degree,
                                                                                int spans) {
    const int d = degree, m = spans;
    if (d < 0 || m < 1) throw std::invalid_argument("closed_form_basis_integrals: bad arguments");
    if (m < d)
        throw std::domain_error("closed_form_basis_integrals: requires spans >= degree");
    const int n = m + d;
    std::vector<double> q(static_cast<std::size_t>(n)), r(static_cast<std::size_t>(n));
    // One-based positions: ramp of length d, flat middle, mirrored tail.
    for (int k = 1; k <= m; ++k)
        q[static_cast<std::size_t>(k - 1)] =
            (k <= d) ? static_cast<double>(k) / ((d + 1.0) * m) : 1.0 / m;
    for (int k = m + 1; k <= n; ++k)
        q[static_cast<std::size_t>(k - 1)] = q[static_cast<std::size_t>(n - k)];
    for (int k = 1; k <= m; ++k) {
        if (k <= d)
            r[static_cast<std::size_t>(k - 1)] =
                static_cast<double>(k) * k * (k + 1.0) / (2.0 * (d + 1.0) * (d + 2.0) * m * m);
        else
            r[static_cast<std::size_t>(k - 1)] = (2.0 * k - d - 1.0) / (2.0 * m * m);
    }
    for (int k = m + 1; k <= n; ++k)
        r[static_cast<std::size_t>(k - 1)] =
            q[static_cast<std::size_t>(n - k)] - r[static_cast<std::size_t>(n - k)];
    return {std::move(q), std::move(r)};
}

double bernstein_density(int n, int k, double t) {
    if (n < 1 || k < 1 || k > n) throw std::invalid_argument("bernstein_density: bad indices");
    double binom = 1.0;
    for (int i = 1; i <= k - 1; ++i) binom = binom * (n - i) / i;  // C(n-1, k-1)
    return n * binom * std::pow(t, k - 1) * std::pow(1.0 - t, n - k);
}

}  // namespace bsc
