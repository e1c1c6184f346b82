#include "bsc/moments.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "bsc/stirling.hpp"

namespace bsc {

namespace {

void check_query(int d, int h) {
    if (d < 0 || h < 0) throw std::invalid_argument("basis moments: d and h must be >= 0");
}

Rational recurrence_impl(int d, int i, int h);

// Cache keyed by the exact (d,i,h) triple. Lookups and inserts are locked;
// the recursion itself runs unlocked, so a race at worst recomputes a value.
Rational recurrence_cached(int d, int i, int h) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, Rational> cache;
    const auto key = std::make_tuple(d, i, h);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Rational value = recurrence_impl(d, i, h);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, value);
    return value;
}

Rational recurrence_impl(int d, int i, int h) {
    if (i < -d) return 0;
    if (d == 0) {
        // integral of t^h over [i, i+1)
        BigInt hi = boost::multiprecision::pow(BigInt(i + 1), static_cast<unsigned>(h + 1));
        BigInt lo = boost::multiprecision::pow(BigInt(i), static_cast<unsigned>(h + 1));
        return Rational(hi - lo, h + 1);
    }
    if (i == -d)
        return recurrence_cached(d - 1, -d + 1, h) - recurrence_cached(d - 1, -d + 1, h + 1);
    if (i < 0) {
        Rational first = recurrence_cached(d - 1, i, h + 1) / (i + d);
        Rational second = (Rational(i + d + 1) * recurrence_cached(d - 1, i + 1, h) -
                           recurrence_cached(d - 1, i + 1, h + 1)) /
                          (i + d + 1);
        return first + second;
    }
    Rational first = (recurrence_cached(d - 1, i, h + 1) - Rational(i) * recurrence_cached(d - 1, i, h)) / d;
    Rational second = (Rational(i + d + 1) * recurrence_cached(d - 1, i + 1, h) -
                       recurrence_cached(d - 1, i + 1, h + 1)) /
                      d;
    return first + second;
}

}  // namespace

Rational basis_moment_recurrence(int d, int i, int h) {
    check_query(d, h);
    return recurrence_cached(d, i, h);
}

Rational basis_moment_closed(int d, int i, int h) {
    check_query(d, h);
    if (i < -d) return 0;
    if (i >= 0) {
        Rational sum = 0;
        for (int l = 0; l <= h; ++l) {
            // 0^0 counts as 1, so the l = 0 term survives at i = 0.
            BigInt ipow = boost::multiprecision::pow(BigInt(i), static_cast<unsigned>(l));
            Rational term(ipow * binomial(h, l) * stirling2(h + d + 1 - l, d + 1),
                          binomial(h + d + 1 - l, d + 1));
            sum += term;
        }
        return sum;
    }
    // -d <= i < 0
    Rational scale(i + d + 1, d + 1);
    return scale * Rational(stirling2(h + i + d + 1, i + d + 1), binomial(h + d + 1, d + 1));
}

std::pair<Rational, Rational> unit_interval_moments(int d, int m, int k) {
    if (d < 0 || m < 1) throw std::invalid_argument("unit_interval_moments: bad arguments");
    if (m < d) throw std::domain_error("unit_interval_moments: requires m >= d");
    const int n = m + d;
    if (k < 0 || k >= n) throw std::invalid_argument("unit_interval_moments: index out of range");
    if (k < m) {
        // Scale t = s/m maps the half-line basis to the unit interval; bases
        // with k < m never see the right clamp.
        const int i = k - d;
        Rational q = basis_moment_closed(d, i, 0) / m;
        Rational r = basis_moment_closed(d, i, 1) / (m * m);
        return {q, r};
    }
    auto [q, r] = unit_interval_moments(d, m, n - 1 - k);
    return {q, q - r};
}

IdentityReport verify_identities(int n_max) {
    if (n_max < 1) throw std::invalid_argument("verify_identities: n_max must be >= 1");
    IdentityReport report;
    for (int n = 0; n <= n_max && report.stirling_identity_pass; ++n) {
        for (int k = 0; k <= n; ++k) {
            BigInt lhs = stirling2(n + 1, k + 1);
            BigInt rhs = 0;
            for (int j = k; j <= n; ++j) rhs += binomial(n, j) * stirling2(j, k);
            if (lhs != rhs) {
                report.stirling_identity_pass = false;
                std::ostringstream os;
                os << "stirling identity fails at n=" << n << " k=" << k;
                report.first_failure = os.str();
                break;
            }
        }
    }
    const int cap = std::min(n_max, 8);
    for (int d = 0; d <= cap && report.shift_identity_pass; ++d) {
        for (int i = 0; i <= 4 && report.shift_identity_pass; ++i) {
            for (int h = 0; h <= cap; ++h) {
                Rational lhs = basis_moment_recurrence(d, i + 1, h);
                Rational rhs = 0;
                for (int j = 0; j <= h; ++j)
                    rhs += Rational(binomial(h, j)) * basis_moment_closed(d, i, j);
                if (lhs != rhs) {
                    report.shift_identity_pass = false;
                    std::ostringstream os;
                    os << "shift identity fails at d=" << d << " i=" << i << " h=" << h;
                    report.first_failure = os.str();
                    break;
                }
            }
        }
    }
    return report;
}

}  // namespace bsc
