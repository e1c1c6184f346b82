#include "bsc/total_positivity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace bsc {

double determinant(std::vector<double> a, int n) {
    if (static_cast<int>(a.size()) != n * n) throw std::invalid_argument("determinant: bad shape");
    double det = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(a[static_cast<std::size_t>(col) * n + col]);
        for (int row = col + 1; row < n; ++row) {
            double cand = std::abs(a[static_cast<std::size_t>(row) * n + col]);
            if (cand > best) {
                best = cand;
                pivot = row;
            }
        }
        if (best == 0.0) return 0.0;
        if (pivot != col) {
            for (int j = 0; j < n; ++j)
                std::swap(a[static_cast<std::size_t>(pivot) * n + j],
                          a[static_cast<std::size_t>(col) * n + j]);
            det = -det;
        }
        const double diag = a[static_cast<std::size_t>(col) * n + col];
        det *= diag;
        for (int row = col + 1; row < n; ++row) {
            const double factor = a[static_cast<std::size_t>(row) * n + col] / diag;
            if (factor == 0.0) continue;
            for (int j = col; j < n; ++j)
                a[static_cast<std::size_t>(row) * n + j] -=
                    factor * a[static_cast<std::size_t>(col) * n + j];
        }
    }
    return det;
}

namespace {

double unit_from_bits(std::uint64_t x) { return static_cast<double>(x >> 11) * 0x1.0p-53; }

// Strictly decreasing tuple in (0,1) with pairwise gaps >= 1e-8.
std::vector<double> decreasing_tuple(std::mt19937_64& rng, int r) {
    std::vector<double> out(static_cast<std::size_t>(r));
    for (int attempt = 0; attempt < 1000; ++attempt) {
        for (double& x : out) x = unit_from_bits(rng());
        std::sort(out.begin(), out.end(), std::greater<>());
        bool ok = out.front() < 1.0 && out.back() > 0.0;
        for (int i = 0; ok && i + 1 < r; ++i)
            if (out[static_cast<std::size_t>(i)] - out[static_cast<std::size_t>(i + 1)] < 1e-8)
                ok = false;
        if (ok) return out;
    }
    throw std::runtime_error("decreasing_tuple: could not draw distinct abscissae");
}

// det / prod(row sup-norms); 0 when some row vanishes.
double scaled_determinant(const std::vector<double>& m, int r) {
    double scale = 1.0;
    for (int i = 0; i < r; ++i) {
        double sup = 0.0;
        for (int j = 0; j < r; ++j)
            sup = std::max(sup, std::abs(m[static_cast<std::size_t>(i) * r + j]));
        scale *= sup;
    }
    if (scale == 0.0) return 0.0;
    return determinant(m, r) / scale;
}

}  // namespace

TpCheckResult tp_order_check(const Kernel& kernel, int order, int trials, std::uint64_t seed,
                             double tol) {
    if (order < 1 || trials < 1)
        throw std::invalid_argument("tp_order_check: order and trials must be >= 1");
    TpCheckResult result;
    result.order = order;
    result.trials = trials;
    result.min_scaled_det = std::numeric_limits<double>::infinity();
    std::vector<double> m(static_cast<std::size_t>(order) * order);
    for (int trial = 0; trial < trials; ++trial) {
        // Per-trial stream so a parallel driver would see the same draws.
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(trial + 1));
        std::vector<double> us = decreasing_tuple(rng, order);
        std::vector<double> vs = decreasing_tuple(rng, order);
        for (int i = 0; i < order; ++i)
            for (int j = 0; j < order; ++j)
                m[static_cast<std::size_t>(i) * order + j] =
                    kernel(us[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(j)]);
        const double scaled = scaled_determinant(m, order);
        result.min_scaled_det = std::min(result.min_scaled_det, scaled);
        result.max_abs_scaled_det = std::max(result.max_abs_scaled_det, std::abs(scaled));
    }
    result.pass = result.min_scaled_det >= -tol;
    return result;
}

TpCheckResult survival_tp_check(const MaxCorrCopula& copula, int order, int trials,
                                std::uint64_t seed, double tol) {
    return tp_order_check([&copula](double u, double v) { return copula.survival(u, v); }, order,
                          trials, seed, tol);
}

namespace {

template <class Copula>
double pqd_determinant_impl(const Copula& copula, double x, double x2, double y, double y2) {
    if (!(x < x2) || !(y < y2))
        throw std::invalid_argument("pqd_determinant: needs x < x2 and y < y2");
    const double m[9] = {
        1.0,       1.0 - y,                1.0 - y2,
        1.0 - x,   copula.survival(x, y),  copula.survival(x, y2),
        1.0 - x2,  copula.survival(x2, y), copula.survival(x2, y2),
    };
    return determinant(std::vector<double>(m, m + 9), 3);
}

}  // namespace

double pqd_determinant(const MaxCorrCopula& copula, double x, double x2, double y, double y2) {
    return pqd_determinant_impl(copula, x, x2, y, y2);
}

double pqd_determinant(const BsplineCopula& copula, double x, double x2, double y, double y2) {
    return pqd_determinant_impl(copula, x, x2, y, y2);
}

MomentMatrixResult moment_matrix_tp_check(const MaxCorrCopula& copula, int order, double tol) {
    if (order < 1 || order > 4)
        throw std::invalid_argument("moment_matrix_tp_check: order must be in [1,4]");
    const BasisSystem& basis = copula.basis();
    const int n = basis.size();

    // E[U^a V^b] = sum_k mu_k(a) mu_k(b) / q_k with mu_k the power moments.
    std::vector<double> mu(static_cast<std::size_t>(n) * static_cast<std::size_t>(order));
    for (int k = 0; k < n; ++k)
        for (int a = 0; a < order; ++a)
            mu[static_cast<std::size_t>(k) * order + a] = basis.power_moment(k, a);
    std::vector<double> m(static_cast<std::size_t>(order) * order, 0.0);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            double acc = 0.0;
            for (int k = 0; k < n; ++k)
                acc += mu[static_cast<std::size_t>(k) * order + a] *
                       mu[static_cast<std::size_t>(k) * order + b] /
                       basis.weights()[static_cast<std::size_t>(k)];
            m[static_cast<std::size_t>(a) * order + b] = acc;
        }

    MomentMatrixResult result;
    result.order = order;
    result.min_scaled_minor = std::numeric_limits<double>::infinity();

    // All row/column subsets of equal size.
    std::vector<int> rows, cols;
    for (int size = 1; size <= order; ++size) {
        std::vector<int> ridx(static_cast<std::size_t>(size));
        std::vector<int> cidx(static_cast<std::size_t>(size));
        std::vector<bool> rmask(static_cast<std::size_t>(order), false);
        std::fill(rmask.end() - size, rmask.end(), true);
        do {
            int ri = 0;
            for (int i = 0; i < order; ++i)
                if (rmask[static_cast<std::size_t>(i)]) ridx[static_cast<std::size_t>(ri++)] = i;
            std::vector<bool> cmask(static_cast<std::size_t>(order), false);
            std::fill(cmask.end() - size, cmask.end(), true);
            do {
                int ci = 0;
                for (int j = 0; j < order; ++j)
                    if (cmask[static_cast<std::size_t>(j)]) cidx[static_cast<std::size_t>(ci++)] = j;
                std::vector<double> sub(static_cast<std::size_t>(size) * size);
                for (int i = 0; i < size; ++i)
                    for (int j = 0; j < size; ++j)
                        sub[static_cast<std::size_t>(i) * size + j] =
                            m[static_cast<std::size_t>(ridx[static_cast<std::size_t>(i)]) * order +
                              cidx[static_cast<std::size_t>(j)]];
                result.min_scaled_minor =
                    std::min(result.min_scaled_minor, scaled_determinant(sub, size));
            } while (std::next_permutation(cmask.begin(), cmask.end()));
        } while (std::next_permutation(rmask.begin(), rmask.end()));
    }

    if (order >= 3) {
        auto e = [&](int a, int b) { return m[static_cast<std::size_t>(a) * order + b]; };
        result.order3_inequality = e(2, 2) * e(1, 1) - e(2, 1) * e(1, 2) -
                                   e(1, 0) * e(2, 2) * e(0, 1) + e(2, 0) * e(1, 2) * e(0, 1) +
                                   e(1, 0) * e(2, 1) * e(0, 2) - e(2, 0) * e(1, 1) * e(0, 2);
    }
    result.pass = result.min_scaled_minor >= -tol;
    return result;
}

double schur_function(std::span<const int> kappa, std::span<const double> z) {
    const int r = static_cast<int>(z.size());
    if (r < 1) throw std::invalid_argument("schur_function: empty argument");
    if (kappa.size() > z.size())
        throw std::invalid_argument("schur_function: partition longer than argument");
    for (std::size_t i = 0; i < kappa.size(); ++i) {
        if (kappa[i] < 0) throw std::invalid_argument("schur_function: negative part");
        if (i + 1 < kappa.size() && kappa[i] < kappa[i + 1])
            throw std::invalid_argument("schur_function: partition must be weakly decreasing");
    }
    for (int i = 0; i < r; ++i) {
        if (z[static_cast<std::size_t>(i)] < 0.0)
            throw std::invalid_argument("schur_function: arguments must be nonnegative");
        if (i + 1 < r && z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(i + 1)] < 1e-8)
            throw std::invalid_argument("schur_function: arguments too close or not decreasing");
    }
    std::vector<double> num(static_cast<std::size_t>(r) * r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            const int part = (j < static_cast<int>(kappa.size())) ? kappa[static_cast<std::size_t>(j)] : 0;
            num[static_cast<std::size_t>(i) * r + j] =
                std::pow(z[static_cast<std::size_t>(i)], part + r - 1 - j);
        }
    double vandermonde = 1.0;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            vandermonde *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
    return determinant(std::move(num), r) / vandermonde;
}

MinorPair bernstein_minor_oracle(int n, std::span<const int> k_decreasing,
                                 std::span<const double> t_decreasing) {
    const int r = static_cast<int>(k_decreasing.size());
    if (r < 1 || t_decreasing.size() != k_decreasing.size())
        throw std::invalid_argument("bernstein_minor_oracle: bad sizes");
    for (int j = 0; j < r; ++j) {
        if (k_decreasing[static_cast<std::size_t>(j)] < 1 ||
            k_decreasing[static_cast<std::size_t>(j)] > n)
            throw std::invalid_argument("bernstein_minor_oracle: basis index out of range");
        if (j + 1 < r && k_decreasing[static_cast<std::size_t>(j)] <=
                             k_decreasing[static_cast<std::size_t>(j + 1)])
            throw std::invalid_argument("bernstein_minor_oracle: indices must decrease");
    }
    for (int i = 0; i < r; ++i) {
        const double t = t_decreasing[static_cast<std::size_t>(i)];
        if (!(t > 0.0) || !(t < 1.0))
            throw std::invalid_argument("bernstein_minor_oracle: points must lie in (0,1)");
        if (i + 1 < r && !(t > t_decreasing[static_cast<std::size_t>(i + 1)]))
            throw std::invalid_argument("bernstein_minor_oracle: points must decrease");
    }

    MinorPair out;
    std::vector<double> m(static_cast<std::size_t>(r) * r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            m[static_cast<std::size_t>(i) * r + j] =
                bernstein_density(n, k_decreasing[static_cast<std::size_t>(j)],
                                  t_decreasing[static_cast<std::size_t>(i)]);
    out.direct = determinant(std::move(m), r);

    // Factorized route: pull out the coefficients k C(n,k), the powers of
    // 1-t, and the Vandermonde in z = t/(1-t); the Schur function carries
    // what is left.
    std::vector<int> kappa(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j)
        kappa[static_cast<std::size_t>(j)] = k_decreasing[static_cast<std::size_t>(j)] - 1 - (r - 1 - j);
    std::vector<double> z(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        const double t = t_decreasing[static_cast<std::size_t>(i)];
        z[static_cast<std::size_t>(i)] = t / (1.0 - t);
    }
    double factor = 1.0;
    for (int j = 0; j < r; ++j) {
        const int k = k_decreasing[static_cast<std::size_t>(j)];
        double binom = 1.0;
        for (int i = 1; i <= k; ++i) binom = binom * (n - k + i) / i;  // C(n, k)
        factor *= k * binom;
    }
    for (int i = 0; i < r; ++i)
        factor *= std::pow(1.0 - t_decreasing[static_cast<std::size_t>(i)], n - 1);
    double cross = 1.0;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            const double ti = t_decreasing[static_cast<std::size_t>(i)];
            const double tj = t_decreasing[static_cast<std::size_t>(j)];
            cross *= (ti - tj) / ((1.0 - ti) * (1.0 - tj));
        }
    out.via_schur = factor * cross * schur_function(kappa, z);
    return out;
}

}  // namespace bsc
