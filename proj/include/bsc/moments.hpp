#pragma once

#include <string>
#include <utility>

#include "bsc/rational.hpp"

namespace bsc {

/// Exact h-moments gamma(d,i,h) = integral of t^h N^d_i(t) over [0,inf) for
/// B-splines with knots 0,...,0,1,2,3,... (degree+1 leading zeros, so
/// t_i = max(i,0)). Zero for i < -d. Two independent routes are provided:
/// the recurrence in d and the Stirling-number closed form; they must agree
/// exactly.
Rational basis_moment_recurrence(int d, int i, int h);
Rational basis_moment_closed(int d, int i, int h);

/// Exact integral q_k and first moment r_k of N^d on [0,1] with m uniform
/// spans, k zero-based in [0, m+d). Requires m >= degree: bases touching the
/// right boundary are resolved by reflection, which needs the two boundary
/// regions disjoint. Use quadrature for m < degree.
std::pair<Rational, Rational> unit_interval_moments(int d, int m, int k);

struct IdentityReport {
    bool stirling_identity_pass = true;  // S(n+1,k+1) = sum_j C(n,j) S(j,k)
    bool shift_identity_pass = true;     // gamma(d,i+1,h) = sum_j C(h,j) gamma(d,i,j)
    std::string first_failure;           // empty when everything holds
    bool pass() const { return stirling_identity_pass && shift_identity_pass; }
};

/// Checks the two identities exactly: the Stirling sum for all k <= n <=
/// n_max, the moment shift for i in [0,4] and d, h <= min(n_max, 8).
IdentityReport verify_identities(int n_max);

}  // namespace bsc
