#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "bsc/basis_system.hpp"
#include "bsc/moments.hpp"
#include "bsc/quadrature.hpp"
#include "bsc/stirling.hpp"

using bsc::BigInt;
using bsc::Rational;

namespace {

// Independent partition counter: enumerates restricted growth strings (one
// canonical string per set partition) and tallies them by block count.
void count_partitions(int n, int pos, int max_used, std::vector<long long>& by_blocks) {
    if (pos == n) {
        ++by_blocks[static_cast<std::size_t>(max_used + 1)];
        return;
    }
    for (int b = 0; b <= max_used + 1; ++b)
        count_partitions(n, pos + 1, std::max(max_used, b), by_blocks);
}

std::vector<long long> partition_counts(int n) {
    std::vector<long long> by_blocks(static_cast<std::size_t>(n + 1), 0);
    if (n == 0) {
        by_blocks.resize(1);
        by_blocks[0] = 1;
        return by_blocks;
    }
    count_partitions(n, 1, 0, by_blocks);  // element 0 always opens block 0
    return by_blocks;
}

// The half-line basis recursion, written out independently for use as a
// quadrature oracle against the exact moments.
double halfline_bspline(int d, int i, double t) {
    if (i < -d) return 0.0;
    auto knot = [](int idx) { return static_cast<double>(std::max(idx, 0)); };
    if (d == 0) return (i >= 0 && t >= i && t < i + 1) ? 1.0 : 0.0;
    double acc = 0.0;
    const double da = knot(i + d) - knot(i);
    if (da > 0.0) acc += (t - knot(i)) / da * halfline_bspline(d - 1, i, t);
    const double db = knot(i + d + 1) - knot(i + 1);
    if (db > 0.0) acc += (knot(i + d + 1) - t) / db * halfline_bspline(d - 1, i + 1, t);
    return acc;
}

double halfline_moment(int d, int i, int h) {
    const int points = (d + h) / 2 + 2;
    double acc = 0.0;
    for (int j = std::max(i, 0); j <= i + d; ++j)
        acc += bsc::integrate(
            [&](double t) { return std::pow(t, h) * halfline_bspline(d, i, t); },
            static_cast<double>(j), static_cast<double>(j + 1), points);
    return acc;
}

}  // namespace

TEST_CASE("stirling numbers match brute-force partition enumeration") {
    for (int n = 0; n <= 9; ++n) {
        const std::vector<long long> counts = partition_counts(n);
        for (int k = 0; k <= n; ++k) {
            const BigInt want(counts[static_cast<std::size_t>(k)]);
            CHECK(bsc::stirling2(n, k) == want);
            CHECK(bsc::stirling2_explicit(n, k) == want);
        }
    }
    CHECK(bsc::stirling2(4, 2) == 7);
}

TEST_CASE("stirling edge rows and frozen identities") {
    CHECK(bsc::stirling2(0, 0) == 1);
    for (int n = 1; n <= 15; ++n) {
        CHECK(bsc::stirling2(n, 0) == 0);
        CHECK(bsc::stirling2(n, 1) == 1);
        CHECK(bsc::stirling2(n, n) == 1);
        CHECK(bsc::stirling2(n, n - 1) == BigInt(n) * (n - 1) / 2);
        CHECK(bsc::stirling2(3, n + 10) == 0);
    }
    CHECK_THROWS_AS(bsc::stirling2(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(bsc::stirling2(3, -2), std::invalid_argument);
    CHECK_THROWS_AS(bsc::stirling2_explicit(-1, 0), std::invalid_argument);
}

TEST_CASE("recurrence and explicit sum agree far past 64-bit range") {
    for (int n = 0; n <= 30; ++n)
        for (int k = 0; k <= n; ++k) CHECK(bsc::stirling2(n, k) == bsc::stirling2_explicit(n, k));
    // Values grow past 64-bit range quickly.
    CHECK(bsc::stirling2(40, 20) > BigInt("18446744073709551615"));
}

TEST_CASE("row sums are Bell numbers (independent recurrence)") {
    std::vector<BigInt> bell{1};
    for (int n = 0; n < 15; ++n) {
        BigInt next = 0;
        for (int k = 0; k <= n; ++k) next += bsc::binomial(n, k) * bell[static_cast<std::size_t>(k)];
        bell.push_back(next);
    }
    for (int n = 0; n <= 15; ++n) {
        BigInt row = 0;
        for (int k = 0; k <= n; ++k) row += bsc::stirling2(n, k);
        CHECK(row == bell[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("moment boundary values") {
    CHECK(bsc::basis_moment_recurrence(0, 2, 1) == Rational(5, 2));
    CHECK(bsc::basis_moment_closed(2, -2, 1) == Rational(1, 12));
    CHECK(bsc::basis_moment_recurrence(2, -2, 1) == Rational(1, 12));
    for (int d = 0; d <= 8; ++d) {
        for (int h = 0; h <= 8; ++h) {
            const Rational want(bsc::factorial(h) * bsc::factorial(d), bsc::factorial(h + d + 1));
            CHECK(bsc::basis_moment_recurrence(d, -d, h) == want);
            CHECK(bsc::basis_moment_closed(d, -d, h) == want);
        }
        CHECK(bsc::basis_moment_closed(d, -d - 1, 3) == 0);
        CHECK(bsc::basis_moment_recurrence(d, -d - 1, 3) == 0);
    }
    CHECK_THROWS_AS(bsc::basis_moment_recurrence(-1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(bsc::basis_moment_closed(0, 0, -1), std::invalid_argument);
}

TEST_CASE("zeroth and first moments in closed form") {
    for (int d = 0; d <= 8; ++d)
        for (int i = 0; i <= 10; ++i) {
            CHECK(bsc::basis_moment_closed(d, i, 0) == 1);
            CHECK(bsc::basis_moment_closed(d, i, 1) == Rational(d + 2 * i + 1, 2));
        }
    CHECK(bsc::basis_moment_closed(1, 0, 1) == 1);
}

TEST_CASE("index-one moments reduce to a single Stirling ratio") {
    for (int d = 0; d <= 8; ++d)
        for (int h = 0; h <= 8; ++h) {
            const Rational want(bsc::stirling2(h + d + 2, d + 2), bsc::binomial(h + d + 1, d + 1));
            CHECK(bsc::basis_moment_closed(d, 1, h) == want);
            CHECK(bsc::basis_moment_recurrence(d, 1, h) == want);
        }
}

TEST_CASE("recurrence equals closed form across the desk-scale lattice") {
    for (int d = 0; d <= 8; ++d)
        for (int i = -d; i <= 10; ++i)
            for (int h = 0; h <= 8; ++h)
                CHECK(bsc::basis_moment_recurrence(d, i, h) == bsc::basis_moment_closed(d, i, h));
}

TEST_CASE("exact moments match half-line quadrature") {
    for (int d = 0; d <= 5; ++d)
        for (int i = -d; i <= 5; ++i)
            for (int h = 0; h <= 4; ++h) {
                const double exact = bsc::to_double(bsc::basis_moment_closed(d, i, h));
                const double numeric = halfline_moment(d, i, h);
                CHECK(std::abs(exact - numeric) <= 1e-12 * std::max(1.0, std::abs(exact)));
            }
}

TEST_CASE("unit-interval moments: frozen values, gate, quadrature agreement") {
    auto [q1, r1] = bsc::unit_interval_moments(1, 3, 0);
    CHECK(q1 == Rational(1, 6));
    CHECK(r1 == Rational(1, 54));
    CHECK_THROWS_AS(bsc::unit_interval_moments(3, 2, 0), std::domain_error);
    CHECK_THROWS_AS(bsc::unit_interval_moments(1, 3, 4), std::invalid_argument);

    for (int d = 0; d <= 6; ++d)
        for (int m = std::max(d, 1); m <= 10; ++m) {
            bsc::BasisSystem basis{bsc::KnotVector::uniform(d, m)};
            for (int k = 0; k < basis.size(); ++k) {
                auto [q, r] = bsc::unit_interval_moments(d, m, k);
                CHECK(std::abs(bsc::to_double(q) -
                               basis.weights()[static_cast<std::size_t>(k)]) <= 1e-12);
                CHECK(std::abs(bsc::to_double(r) -
                               basis.first_moments()[static_cast<std::size_t>(k)]) <= 1e-12);
            }
        }
}

TEST_CASE("concurrent callers see identical results") {
    // Warm nothing: each thread races the memo tables from cold.
    std::vector<Rational> serial;
    for (int i = -4; i <= 6; ++i)
        for (int h = 0; h <= 6; ++h) serial.push_back(bsc::basis_moment_closed(4, i, h));

    std::vector<std::vector<Rational>> results(8);
    std::vector<std::thread> threads;
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([&results, t] {
            std::vector<Rational> mine;
            for (int i = -4; i <= 6; ++i)
                for (int h = 0; h <= 6; ++h) mine.push_back(bsc::basis_moment_recurrence(4, i, h));
            for (int n = 0; n <= 20; ++n) (void)bsc::stirling2(n, n / 2);
            results[static_cast<std::size_t>(t)] = std::move(mine);
        });
    for (auto& t : threads) t.join();
    for (const auto& r : results) CHECK(r == serial);
}

TEST_CASE("identity report") {
    bsc::IdentityReport tiny = bsc::verify_identities(1);
    CHECK(tiny.pass());
    bsc::IdentityReport full = bsc::verify_identities(20);
    CHECK(full.stirling_identity_pass);
    CHECK(full.shift_identity_pass);
    CHECK(full.first_failure.empty());

    // One shift instance spelled out: d=2, i: 0 -> 1, h=2.
    Rational lhs = bsc::basis_moment_closed(2, 1, 2);
    Rational rhs = 0;
    for (int j = 0; j <= 2; ++j)
        rhs += Rational(bsc::binomial(2, j)) * bsc::basis_moment_closed(2, 0, j);
    CHECK(lhs == rhs);
}
