#include "bsc/copula.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "bsc/kernels.hpp"

namespace bsc {

namespace {

void check_unit(double u, double v) {
    if (u < 0.0 || u > 1.0 || v < 0.0 || v > 1.0)
        throw std::invalid_argument("copula: arguments outside [0,1]");
}

void check_weights_match(std::span<const double> basis_q, std::span<const double> margin_q,
                         const char* which) {
    if (basis_q.size() != margin_q.size())
        throw ValidationError(ValidationError::Kind::shape_mismatch, -1,
                              static_cast<double>(margin_q.size()),
                              static_cast<double>(basis_q.size()),
                              std::string("copula: ") + which + " margin size does not match basis");
    for (std::size_t k = 0; k < basis_q.size(); ++k) {
        if (std::abs(basis_q[k] - margin_q[k]) > 1e-10)
            throw ValidationError(ValidationError::Kind::weight_mismatch, static_cast<int>(k),
                                  margin_q[k], basis_q[k],
                                  std::string("copula: ") + which +
                                      " margin does not match the basis weights");
    }
}

double unit_from_bits(std::uint64_t x) { return static_cast<double>(x >> 11) * 0x1.0p-53; }

std::vector<std::pair<double, double>> mixture_sample(const BasisSystem& first,
                                                      const BasisSystem& second,
                                                      std::span<const double> cell_mass,
                                                      std::int64_t count, std::uint64_t seed) {
    if (count < 0) throw std::invalid_argument("sample: count must be >= 0");
    const int cols = second.size();
    std::vector<double> cum(cell_mass.size());
    double total = 0.0;
    for (std::size_t i = 0; i < cell_mass.size(); ++i) {
        total += cell_mass[i];
        cum[i] = total;
    }
    std::mt19937_64 rng(seed);
    std::vector<std::pair<double, double>> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::int64_t s = 0; s < count; ++s) {
        const double x = unit_from_bits(rng()) * total;
        const auto it = std::upper_bound(cum.begin(), cum.end(), x);
        const std::size_t cell = std::min(static_cast<std::size_t>(it - cum.begin()),
                                          cum.size() - 1);
        const int k = static_cast<int>(cell) / cols;
        const int l = static_cast<int>(cell) % cols;
        const double u = first.inverse_cdf(k, unit_from_bits(rng()));
        const double v = second.inverse_cdf(l, unit_from_bits(rng()));
        out.emplace_back(u, v);
    }
    return out;
}

}  // namespace

BsplineCopula::BsplineCopula(BasisSystem basis, ParameterMatrix parameters)
    : BsplineCopula(basis, basis, std::move(parameters)) {}

BsplineCopula::BsplineCopula(BasisSystem first, BasisSystem second, ParameterMatrix parameters)
    : first_(std::move(first)), second_(std::move(second)), parameters_(std::move(parameters)) {
    check_weights_match(first_.weights(), parameters_.row_weights(), "row");
    check_weights_match(second_.weights(), parameters_.col_weights(), "column");
}

double BsplineCopula::cdf(double u, double v) const {
    check_unit(u, v);
    thread_local std::vector<double> pu, pv;
    pu.resize(static_cast<std::size_t>(first_.size()));
    pv.resize(static_cast<std::size_t>(second_.size()));
    first_.cdf_row(u, pu);
    second_.cdf_row(v, pv);
    return kernels::bilinear(pu, parameters_.entries(), pv);
}

double BsplineCopula::density(double u, double v) const {
    check_unit(u, v);
    thread_local std::vector<double> pu, pv;
    pu.resize(static_cast<std::size_t>(first_.size()));
    pv.resize(static_cast<std::size_t>(second_.size()));
    first_.density_row(u, pu);
    second_.density_row(v, pv);
    return kernels::bilinear(pu, parameters_.entries(), pv);
}

double BsplineCopula::survival(double u, double v) const {
    check_unit(u, v);
    return 1.0 - u - v + cdf(u, v);
}

double BsplineCopula::expected_uv() const {
    if (!parameters_.is_square())
        throw std::domain_error("expected_uv: requires the square case");
    return kernels::bilinear(first_.means(), parameters_.entries(), second_.means());
}

double BsplineCopula::correlation() const { return 12.0 * (expected_uv() - 0.25); }

std::vector<std::pair<double, double>> BsplineCopula::sample(std::int64_t count,
                                                             std::uint64_t seed) const {
    return mixture_sample(first_, second_, parameters_.entries(), count, seed);
}

MaxCorrCopula::MaxCorrCopula(BasisSystem basis) : basis_(std::move(basis)) {}

double MaxCorrCopula::cdf(double u, double v) const {
    check_unit(u, v);
    thread_local std::vector<double> pu, pv;
    pu.resize(static_cast<std::size_t>(basis_.size()));
    pv.resize(static_cast<std::size_t>(basis_.size()));
    basis_.cdf_row(u, pu);
    basis_.cdf_row(v, pv);
    return kernels::weighted_dot(basis_.weights(), pu, pv);
}

double MaxCorrCopula::density(double u, double v) const {
    check_unit(u, v);
    thread_local std::vector<double> pu, pv;
    pu.resize(static_cast<std::size_t>(basis_.size()));
    pv.resize(static_cast<std::size_t>(basis_.size()));
    basis_.density_row(u, pu);
    basis_.density_row(v, pv);
    return kernels::weighted_dot(basis_.weights(), pu, pv);
}

double MaxCorrCopula::survival(double u, double v) const {
    check_unit(u, v);
    return 1.0 - u - v + cdf(u, v);
}

double MaxCorrCopula::expected_uv() const {
    return kernels::weighted_dot(basis_.weights(), basis_.means(), basis_.means());
}

double MaxCorrCopula::correlation() const { return 12.0 * (expected_uv() - 0.25); }

std::vector<std::pair<double, double>> MaxCorrCopula::sample(std::int64_t count,
                                                             std::uint64_t seed) const {
    // Diagonal cells only; lay the weights on the diagonal of a dense n*n
    // mass vector so the draw sequence matches the general sampler.
    const int n = basis_.size();
    std::vector<double> mass(static_cast<std::size_t>(n) * n, 0.0);
    for (int k = 0; k < n; ++k)
        mass[static_cast<std::size_t>(k) * n + k] = basis_.weights()[static_cast<std::size_t>(k)];
    return mixture_sample(basis_, basis_, mass, count, seed);
}

BsplineCopula MaxCorrCopula::general() const {
    return BsplineCopula(basis_, ParameterMatrix::diagonal(basis_.weights()));
}

double closed_form_max_correlation(int n, int d) {
    if (d < 0) throw std::invalid_argument("closed_form_max_correlation: d must be >= 0");
    const int m = n - d;
    if (m < 1) throw std::domain_error("closed_form_max_correlation: requires n - d >= 1");
    if (m < d)
        throw std::domain_error(
            "closed_form_max_correlation: requires n - d >= d; use the direct correlation");
    const double md = m;
    return 1.0 - (d + 1.0) / (md * md) +
           d * (d + 3.0) * (2.0 * d + 3.0) / (5.0 * (d + 2.0) * md * md * md);
}

double fh_distance(const MaxCorrCopula& copula, int grid) {
    if (grid < 2) throw std::invalid_argument("fh_distance: grid must be >= 2");
    const BasisSystem& basis = copula.basis();
    const int n = basis.size();
    const int points = grid + 1;
    std::vector<double> rows(static_cast<std::size_t>(points) * n);
    for (int i = 0; i < points; ++i)
        basis.cdf_row(static_cast<double>(i) / grid,
                      std::span<double>(rows.data() + static_cast<std::size_t>(i) * n,
                                        static_cast<std::size_t>(n)));
    std::vector<double> weighted(static_cast<std::size_t>(n));
    double worst = 0.0;
    for (int i = 0; i < points; ++i) {
        const double u = static_cast<double>(i) / grid;
        std::span<const double> row(rows.data() + static_cast<std::size_t>(i) * n,
                                    static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k)
            weighted[static_cast<std::size_t>(k)] =
                basis.weights()[static_cast<std::size_t>(k)] * row[static_cast<std::size_t>(k)];
        for (int j = 0; j < points; ++j) {
            const double v = static_cast<double>(j) / grid;
            std::span<const double> col(rows.data() + static_cast<std::size_t>(j) * n,
                                        static_cast<std::size_t>(n));
            const double value = kernels::dot(weighted, col);
            worst = std::max(worst, std::abs(std::min(u, v) - value));
        }
    }
    return worst;
}

}  // namespace bsc
