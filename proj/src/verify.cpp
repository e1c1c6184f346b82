#include "bsc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "bsc/copula.hpp"
#include "bsc/moments.hpp"
#include "bsc/quadrature.hpp"
#include "bsc/rational.hpp"
#include "bsc/stirling.hpp"
#include "bsc/total_positivity.hpp"

namespace bsc {

namespace {

CheckResult tp_record(const std::string& kernel, int n, int d, const TpCheckResult& r,
                      bool pass_override, double value) {
    CheckResult c;
    std::ostringstream os;
    os << kernel << " n=" << n << " d=" << d << " r=" << r.order;
    c.name = os.str();
    c.pass = pass_override;
    c.value = value;
    c.kernel = kernel;
    c.n = n;
    c.d = d;
    c.r = r.order;
    c.trials = r.trials;
    c.is_tp_record = true;
    return c;
}

double unit_from_bits(std::uint64_t x) { return static_cast<double>(x >> 11) * 0x1.0p-53; }

}  // namespace

SuiteResult run_tp_suite(const TpSuiteOptions& options) {
    SuiteResult suite;
    suite.suite = "tp";
    for (int d = 0; d <= options.max_degree; ++d) {
        for (int m = 1; m <= options.max_spans; ++m) {
            const int n = m + d;
            MaxCorrCopula copula(BasisSystem(KnotVector::uniform(d, m)));
            const Kernel cdf = [&copula](double u, double v) { return copula.cdf(u, v); };
            const Kernel density = [&copula](double u, double v) { return copula.density(u, v); };
            const Kernel surv = [&copula](double u, double v) { return copula.survival(u, v); };
            const Kernel fh = [](double u, double v) { return std::min(u, v); };
            const int rmax = std::min(n, options.max_order);
            for (int r = 1; r <= rmax; ++r) {
                struct Named {
                    const char* label;
                    const Kernel* kernel;
                } kernels[] = {{"cdf", &cdf}, {"density", &density}, {"survival", &surv}, {"min", &fh}};
                for (const auto& [label, kernel] : kernels) {
                    TpCheckResult res = tp_order_check(*kernel, r, options.trials, options.seed,
                                                       options.tol);
                    suite.checks.push_back(tp_record(label, n, d, res, res.pass, res.min_scaled_det));
                    suite.pass = suite.pass && res.pass;
                }
            }
            // Rank degeneracy: r = n+1 determinants vanish up to roundoff.
            TpCheckResult degen = tp_order_check(cdf, n + 1, options.trials, options.seed + 1,
                                                 options.tol);
            const bool near_zero = degen.max_abs_scaled_det <= options.tol;
            CheckResult c;
            c.name = "rank degeneracy r=" + std::to_string(n + 1) + ", n=" + std::to_string(n) +
                     " d=" + std::to_string(d);
            c.pass = near_zero;
            c.value = degen.max_abs_scaled_det;
            suite.checks.push_back(c);
            suite.pass = suite.pass && near_zero;
        }
    }
    return suite;
}

SuiteResult run_fh_convergence_suite(const FhSuiteOptions& options) {
    SuiteResult suite;
    suite.suite = "fh-convergence";
    for (int d : options.degrees) {
        std::vector<double> distances;
        std::ostringstream detail;
        bool decreasing = true;
        bool tracks = true;
        for (std::size_t idx = 0; idx < options.spans.size(); ++idx) {
            const int m = options.spans[idx];
            MaxCorrCopula copula(BasisSystem(KnotVector::uniform(d, m)));
            const double dist = fh_distance(copula, options.grid);
            if (!distances.empty() && !(dist < distances.back())) decreasing = false;
            distances.push_back(dist);
            if (idx) detail << " ";
            detail << "m=" << m << ":" << dist;
            if (m >= 8) {
                const double gap = 1.0 - copula.correlation();
                const double ratio = gap * m * m / (d + 1.0);
                if (ratio < 0.5 || ratio > 2.0) tracks = false;
            }
        }
        CheckResult c;
        c.name = "fh distance decreasing, d=" + std::to_string(d);
        c.pass = decreasing;
        c.value = distances.back();
        c.detail = detail.str();
        suite.checks.push_back(c);
        CheckResult t;
        t.name = "1-corr tracks (d+1)/m^2, d=" + std::to_string(d);
        t.pass = tracks;
        t.value = 0.0;
        suite.checks.push_back(t);
        suite.pass = suite.pass && decreasing && tracks;
    }
    return suite;
}

SuiteResult run_identity_suite(const IdentitySuiteOptions& options) {
    SuiteResult suite;
    suite.suite = "identities";

    IdentityReport report = verify_identities(options.stirling_n_max);
    {
        CheckResult c;
        c.name = "stirling sum identity, n<=" + std::to_string(options.stirling_n_max);
        c.pass = report.stirling_identity_pass;
        c.detail = report.stirling_identity_pass ? "" : report.first_failure;
        suite.checks.push_back(c);
        CheckResult s;
        s.name = "moment shift identity, d,h<=" + std::to_string(std::min(options.stirling_n_max, 8));
        s.pass = report.shift_identity_pass;
        s.detail = report.shift_identity_pass ? "" : report.first_failure;
        suite.checks.push_back(s);
        suite.pass = suite.pass && report.pass();
    }

    // Closed form vs recurrence over the whole desk-scale lattice.
    {
        bool equal = true;
        std::string where;
        for (int d = 0; d <= options.moment_cap && equal; ++d)
            for (int i = -d; i <= 10 && equal; ++i)
                for (int h = 0; h <= options.moment_cap && equal; ++h)
                    if (basis_moment_recurrence(d, i, h) != basis_moment_closed(d, i, h)) {
                        equal = false;
                        where = "d=" + std::to_string(d) + " i=" + std::to_string(i) +
                                " h=" + std::to_string(h);
                    }
        CheckResult c;
        c.name = "moment recurrence equals closed form";
        c.pass = equal;
        c.detail = where;
        suite.checks.push_back(c);
        suite.pass = suite.pass && equal;
    }

    // Random minor factorization agreement, direct vs Schur route.
    {
        std::mt19937_64 rng(options.seed + 0xb5ad4eceda1ce2a9ULL);
        double worst = 0.0;
        bool ok = true;
        int done = 0;
        while (done < options.minor_instances) {
            const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(options.minor_max_n));
            const int rmax = std::min(n, options.minor_max_order);
            const int r = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(rmax));
            std::vector<int> all(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
            std::shuffle(all.begin(), all.end(), rng);
            std::vector<int> ks(all.begin(), all.begin() + r);
            std::sort(ks.begin(), ks.end(), std::greater<>());
            std::vector<double> ts(static_cast<std::size_t>(r));
            bool distinct = true;
            for (double& t : ts) t = 0.02 + 0.96 * unit_from_bits(rng());
            std::sort(ts.begin(), ts.end(), std::greater<>());
            for (int i = 0; i + 1 < r; ++i)
                if (ts[static_cast<std::size_t>(i)] - ts[static_cast<std::size_t>(i + 1)] < 1e-6)
                    distinct = false;
            if (!distinct) continue;
            ++done;
            MinorPair pair = bernstein_minor_oracle(n, ks, ts);
            const double scale = std::max({std::abs(pair.direct), std::abs(pair.via_schur), 1e-300});
            const double rel = std::abs(pair.direct - pair.via_schur) / scale;
            worst = std::max(worst, rel);
            if (rel > 1e-8 || pair.direct < -1e-9 * scale) ok = false;
        }
        CheckResult c;
        c.name = "minor factorization agreement, " + std::to_string(options.minor_instances) +
                 " instances";
        c.pass = ok;
        c.value = worst;
        suite.checks.push_back(c);
        suite.pass = suite.pass && ok;
    }
    return suite;
}

SuiteResult run_weight_consistency_suite(const WeightConsistencyOptions& options) {
    SuiteResult suite;
    suite.suite = "lemma31";
    for (int d = 0; d <= options.max_degree; ++d) {
        for (int m = std::max(d, 1); m <= options.max_spans; ++m) {
            const int n = m + d;
            BasisSystem basis{KnotVector::uniform(d, m)};
            auto [cq, cr] = closed_form_basis_integrals(d, m);
            double worst = 0.0;
            for (int k = 0; k < n; ++k) {
                auto [eq, er] = unit_interval_moments(d, m, k);
                worst = std::max(worst, std::abs(to_double(eq) - basis.weights()[static_cast<std::size_t>(k)]));
                worst = std::max(worst, std::abs(to_double(er) - basis.first_moments()[static_cast<std::size_t>(k)]));
                worst = std::max(worst, std::abs(cq[static_cast<std::size_t>(k)] - basis.weights()[static_cast<std::size_t>(k)]));
                worst = std::max(worst, std::abs(cr[static_cast<std::size_t>(k)] - basis.first_moments()[static_cast<std::size_t>(k)]));
            }
            CheckResult c;
            c.name = "q,r exact vs quadrature, d=" + std::to_string(d) + " m=" + std::to_string(m);
            c.pass = worst <= options.tol;
            c.value = worst;
            suite.checks.push_back(c);
            suite.pass = suite.pass && c.pass;
        }
    }
    return suite;
}

SuiteResult run_random_knot_exploration(const RandomKnotOptions& options) {
    SuiteResult suite;
    suite.suite = "conjecture";
    std::mt19937_64 rng(options.seed + 0x6a09e667f3bcc909ULL);
    for (int m : options.spans) {
        // Sorted uniform draws; the mesh shrinks like log(m)/m.
        std::vector<double> interior(static_cast<std::size_t>(m - 1));
        for (double& t : interior) t = unit_from_bits(rng());
        std::sort(interior.begin(), interior.end());
        bool distinct = true;
        double prev = 0.0, mesh = 0.0;
        for (double t : interior) {
            if (t - prev < 1e-9) distinct = false;
            mesh = std::max(mesh, t - prev);
            prev = t;
        }
        mesh = std::max(mesh, 1.0 - prev);
        if (!distinct) continue;
        MaxCorrCopula copula(BasisSystem(KnotVector(options.degree, interior)));
        CheckResult c;
        c.name = "random knots m=" + std::to_string(m);
        c.pass = true;  // exploratory: numbers only
        c.value = copula.correlation();
        std::ostringstream os;
        os << "mesh=" << mesh << " corr=" << copula.correlation();
        c.detail = os.str();
        suite.checks.push_back(c);
    }
    return suite;
}

}  // namespace bsc
