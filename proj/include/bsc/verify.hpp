#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bsc {

struct CheckResult {
    std::string name;
    bool pass = false;
    double value = 0.0;   // headline number for the check (min det, sup distance, ...)
    std::string detail;   // free-form, empty when uninteresting

    // Filled by the total-positivity checks so reports can carry the full
    // {kernel, n, d, r, trials, minScaledDet} record.
    std::string kernel;
    int n = 0, d = 0, r = 0, trials = 0;
    bool is_tp_record = false;
};

struct SuiteResult {
    std::string suite;
    bool pass = true;
    std::vector<CheckResult> checks;
};

struct TpSuiteOptions {
    int max_degree = 3;
    int max_spans = 6;
    int max_order = 4;   // r capped at min(n, max_order)
    int trials = 500;
    std::uint64_t seed = 0;
    double tol = 1e-9;
};

/// Scaled-determinant sweeps of the diagonal copula CDF, density and
/// survival plus the min(u,v) kernel; also checks rank degeneracy at
/// r = n + 1.
SuiteResult run_tp_suite(const TpSuiteOptions& options);

struct FhSuiteOptions {
    std::vector<int> degrees{0, 1, 2};
    std::vector<int> spans{2, 4, 8, 16, 32};
    int grid = 256;
};

/// Checks that the sup-distance to min(u,v) strictly decreases along the
/// span counts and that 1 - corr stays within a factor of 2 of
/// (degree+1)/m^2 from m >= 8 on.
SuiteResult run_fh_convergence_suite(const FhSuiteOptions& options);

struct IdentitySuiteOptions {
    int stirling_n_max = 20;
    int moment_cap = 8;          // d, h bound for the shift identity
    int minor_instances = 1000;  // random factorization cross-checks
    int minor_max_n = 8;
    int minor_max_order = 4;
    std::uint64_t seed = 0;
};

/// Exact combinatorial identities plus the random minor factorization
/// cross-check (direct vs Schur route, relative agreement 1e-8).
SuiteResult run_identity_suite(const IdentitySuiteOptions& options);

struct WeightConsistencyOptions {
    int max_degree = 6;
    int max_spans = 10;
    double tol = 1e-12;
};

/// Exact rational q,r vectors against quadrature for every uniform
/// configuration with degree <= spans.
SuiteResult run_weight_consistency_suite(const WeightConsistencyOptions& options);

struct RandomKnotOptions {
    int degree = 1;
    std::vector<int> spans{4, 8, 16, 32, 64};
    std::uint64_t seed = 0;
};

/// Exploration only: correlation of the diagonal copula over random
/// non-uniform knots as the mesh shrinks. Reports the numbers and always
/// passes; nothing is asserted about the limit.
SuiteResult run_random_knot_exploration(const RandomKnotOptions& options);

}  // namespace bsc
