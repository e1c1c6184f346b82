#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bsc/basis_system.hpp"
#include "bsc/parameter_matrix.hpp"

namespace bsc {

/// Copula C(u,v) = sum_{k,l} r_{kl} Phi_k(u) Phi_l(v) over one basis system
/// per coordinate. Marginals are uniform because the coupling margins equal
/// the basis weights. Immutable; evaluation is pure and thread-safe.
class BsplineCopula {
public:
    BsplineCopula(BasisSystem basis, ParameterMatrix parameters);
    BsplineCopula(BasisSystem first, BasisSystem second, ParameterMatrix parameters);

    double cdf(double u, double v) const;
    double density(double u, double v) const;
    // Pr(U > u, V > v) = 1 - u - v + C(u,v).
    double survival(double u, double v) const;

    // E[UV] through the basis means; requires the square case.
    double expected_uv() const;
    // Pearson correlation, 12 (E[UV] - 1/4).
    double correlation() const;

    // Mixture sampler: pick the cell (k,l) with probability r_{kl}, then
    // draw each coordinate by inverting the cell's marginal CDF. The draw
    // sequence is fixed (cell, u, v), so output depends only on the seed.
    std::vector<std::pair<double, double>> sample(std::int64_t count, std::uint64_t seed) const;

    const BasisSystem& first_basis() const { return first_; }
    const BasisSystem& second_basis() const { return second_; }
    const ParameterMatrix& parameters() const { return parameters_; }

private:
    BasisSystem first_;
    BasisSystem second_;
    ParameterMatrix parameters_;
};

/// The diagonal-coupling member of the family, the one with the largest
/// Pearson correlation: C(u,v) = sum_k q_k Phi_k(u) Phi_k(v).
class MaxCorrCopula {
public:
    explicit MaxCorrCopula(BasisSystem basis);

    double cdf(double u, double v) const;
    double density(double u, double v) const;
    double survival(double u, double v) const;

    double expected_uv() const;  // sum_k r_k^2 / q_k
    double correlation() const;

    std::vector<std::pair<double, double>> sample(std::int64_t count, std::uint64_t seed) const;

    const BasisSystem& basis() const { return basis_; }
    // Same copula with the diagonal matrix spelled out.
    BsplineCopula general() const;

private:
    BasisSystem basis_;
};

/// Correlation of the diagonal copula on n-d uniform spans of degree d:
/// 1 - (d+1)/(n-d)^2 + d(d+3)(2d+3)/(5(d+2)(n-d)^3). Valid only for
/// m = n - d >= max(d, 1); throws std::domain_error otherwise (use
/// MaxCorrCopula::correlation directly for 1 <= m < d).
double closed_form_max_correlation(int n, int d);

/// sup over the (grid+1)^2 lattice {i/grid} of |min(u,v) - C(u,v)|.
double fh_distance(const MaxCorrCopula& copula, int grid);

}  // namespace bsc
