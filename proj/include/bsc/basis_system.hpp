#pragma once

#include <span>
#include <utility>
#include <vector>

#include "bsc/knot_vector.hpp"

namespace bsc {

/// The normalized density system attached to a knot vector: n = m + d
/// densities phi_k = N^d_{k-d}/q_k (k zero-based) whose weighted sum is the
/// constant 1, together with their integrals q_k, first moments r_k, and
/// cumulative distributions Phi_k. Immutable after construction.
class BasisSystem {
public:
    explicit BasisSystem(KnotVector knots);

    int size() const { return static_cast<int>(weights_.size()); }
    const KnotVector& knots() const { return knots_; }

    std::span<const double> weights() const { return weights_; }              // q_k
    std::span<const double> first_moments() const { return first_moments_; }  // r_k
    std::span<const double> means() const { return means_; }                  // r_k / q_k

    double density(int k, double t) const;  // phi_k(t)
    double cdf(int k, double u) const;      // Phi_k(u)

    // Smallest u with |Phi_k(u) - p| <= 1e-12 (bisection on the support).
    double inverse_cdf(int k, double p) const;

    void density_row(double t, std::span<double> out) const;  // all phi_k(t)
    void cdf_row(double u, std::span<double> out) const;      // all Phi_k(u)

    // Support of phi_k clipped to [0,1].
    std::pair<double, double> support(int k) const;

    // Exact-quadrature power moment: integral of t^power * N^d_{k-d}(t).
    double power_moment(int k, int power) const;

private:
    void check_index(int k) const;
    // Integral of N^d_{k-d} over [breakpoint(j), u] for the bases alive on
    // span j; vals has degree+1 slots for k = j..j+d.
    void partial_span_integrals(int j, double u, std::span<double> vals) const;

    KnotVector knots_;
    std::vector<double> weights_;
    std::vector<double> first_moments_;
    std::vector<double> means_;
    // (m+1) x n row-major, cumulative integrals of N^d_{k-d} at breakpoints.
    std::vector<double> cumulative_;
};

/// Closed-form q and r vectors for uniform knots; requires spans >= degree.
std::pair<std::vector<double>, std::vector<double>> closed_form_basis_integrals(int degree,
                                                                                int spans);

/// Density of the k-th smallest of n uniform order statistics,
/// n*C(n-1,k-1)*t^(k-1)*(1-t)^(n-k), k one-based. The one-span system of
/// degree n-1 reduces to these.
double bernstein_density(int n, int k, double t);

}  // namespace bsc
