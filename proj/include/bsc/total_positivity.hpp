#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "bsc/copula.hpp"

namespace bsc {

/// Determinant by LU with partial pivoting; `matrix` is row-major n x n and
/// is consumed as workspace.
double determinant(std::vector<double> matrix, int n);

using Kernel = std::function<double(double, double)>;

struct TpCheckResult {
    int order = 0;   // r
    int trials = 0;
    // Determinants scaled by the product of row sup-norms (0 when a row
    // vanishes, since the determinant is then exactly 0).
    double min_scaled_det = 0.0;
    double max_abs_scaled_det = 0.0;
    bool pass = false;  // min_scaled_det >= -tol
};

/// Draws `trials` pairs of strictly decreasing abscissa tuples in (0,1)
/// (minimum gap 1e-8, degenerate draws are redrawn), forms the matrix
/// K(u_i, v_j) and accumulates its scaled determinant. The trial RNG streams
/// depend only on (seed, trial index).
TpCheckResult tp_order_check(const Kernel& kernel, int order, int trials, std::uint64_t seed,
                             double tol = 1e-9);

TpCheckResult survival_tp_check(const MaxCorrCopula& copula, int order, int trials,
                                std::uint64_t seed, double tol = 1e-9);

/// Determinant of the 3x3 survival matrix bordered by the marginal
/// survivals: rows (1, Gbar(y), Gbar(y')), (Fbar(x), S(x,y), S(x,y')),
/// (Fbar(x'), S(x',y), S(x',y')). Requires x < x2 and y < y2.
double pqd_determinant(const MaxCorrCopula& copula, double x, double x2, double y, double y2);
double pqd_determinant(const BsplineCopula& copula, double x, double x2, double y, double y2);

struct MomentMatrixResult {
    int order = 0;
    double min_scaled_minor = 0.0;   // over all minors of sizes 1..order
    double order3_inequality = 0.0;  // six-term expansion of the full 3x3 minor
    bool pass = false;
};

/// Mixed moments E[U^(i-1) V^(j-1)], i,j <= order, by exact per-span product
/// quadrature against the diagonal copula density; checks every minor.
/// order must be <= 4.
MomentMatrixResult moment_matrix_tp_check(const MaxCorrCopula& copula, int order,
                                          double tol = 1e-8);

/// Ratio of the generalized Vandermonde determinant det(z_i^(kappa_j + r - j))
/// to the plain one; z must be strictly decreasing, nonnegative, with gaps
/// of at least 1e-8. kappa is weakly decreasing, nonnegative, padded with
/// zeros up to z.size().
double schur_function(std::span<const int> kappa, std::span<const double> z);

struct MinorPair {
    double direct = 0.0;
    double via_schur = 0.0;
};

/// r x r minor det(phi_{k_j}(t_i)) of the one-span (order-statistic density)
/// system of size n, evaluated both directly and through its Schur-function
/// factorization. k one-based strictly decreasing, t strictly decreasing in
/// (0,1).
MinorPair bernstein_minor_oracle(int n, std::span<const int> k_decreasing,
                                 std::span<const double> t_decreasing);

}  // namespace bsc
