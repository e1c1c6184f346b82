#pragma once

#include <span>
#include <vector>

namespace bsc {

/// Clamped knot sequence on [0,1]: degree+1 copies of 0, the interior
/// breakpoints, degree+1 copies of 1 (m + 2d + 1 knots in total, where m is
/// the number of spans).
class KnotVector {
public:
    KnotVector(int degree, std::vector<double> interior);
    static KnotVector uniform(int degree, int spans);

    int degree() const { return degree_; }
    int spans() const { return spans_; }                    // m
    int basis_count() const { return spans_ + degree_; }    // n = m + d

    // Knot t_i, i in [-degree, spans+degree].
    double knot(int i) const { return full_[static_cast<std::size_t>(i + degree_)]; }
    std::span<const double> full() const { return full_; }
    std::span<const double> interior() const { return interior_; }

    // Breakpoint s_j = t_j, j in [0, spans]; s_0 = 0, s_m = 1.
    double breakpoint(int j) const { return full_[static_cast<std::size_t>(j + degree_)]; }

    // Index j with t in [s_j, s_{j+1}); t = 1 belongs to the last span.
    int find_span(double t) const;

    bool is_uniform(double tol = 1e-12) const;

private:
    int degree_;
    int spans_;
    std::vector<double> interior_;
    std::vector<double> full_;
};

/// N^d_i(t) by the Cox-de Boor recursion with 0/0 terms taken as 0;
/// i in [-d, m-1], t in [0,1]. Degree-zero pieces are indicators of the
/// half-open spans [t_i, t_{i+1}), with t = 1 folded into the last span so
/// that every basis function integrates like a density.
double eval_bspline(const KnotVector& kv, int i, double t);

/// Values of the degree+1 bases that can be nonzero at t, namely
/// N^d_{j-d}, ..., N^d_j with j = find_span(t); out must have degree+1
/// slots. Returns j.
int nonzero_bspline_values(const KnotVector& kv, double t, std::span<double> out);

/// All basis_count() values N^d_{k-d}(t), k = 0..n-1.
std::vector<double> bspline_row(const KnotVector& kv, double t);

}  // namespace bsc
