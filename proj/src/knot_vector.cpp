#include "bsc/knot_vector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bsc {

KnotVector::KnotVector(int degree, std::vector<double> interior)
    : degree_(degree), spans_(static_cast<int>(interior.size()) + 1),
      interior_(std::move(interior)) {
    if (degree < 0) throw std::invalid_argument("KnotVector: degree must be >= 0");
    double prev = 0.0;
    for (double t : interior_) {
        if (!(t > prev) || !(t < 1.0))
            throw std::invalid_argument("KnotVector: interior knots must be strictly increasing in (0,1)");
        prev = t;
    }
    full_.reserve(static_cast<std::size_t>(spans_ + 2 * degree_ + 1));
    full_.assign(static_cast<std::size_t>(degree_ + 1), 0.0);
    full_.insert(full_.end(), interior_.begin(), interior_.end());
    full_.insert(full_.end(), static_cast<std::size_t>(degree_ + 1), 1.0);
}

KnotVector KnotVector::uniform(int degree, int spans) {
    if (degree < 0) throw std::invalid_argument("KnotVector: degree must be >= 0");
    if (spans < 1) throw std::invalid_argument("KnotVector: spans must be >= 1");
    std::vector<double> interior(static_cast<std::size_t>(spans - 1));
    for (int i = 1; i < spans; ++i)
        interior[static_cast<std::size_t>(i - 1)] = static_cast<double>(i) / spans;
    return KnotVector(degree, std::move(interior));
}

int KnotVector::find_span(double t) const {
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("find_span: t outside [0,1]");
    if (t >= 1.0) return spans_ - 1;
    auto it = std::upper_bound(interior_.begin(), interior_.end(), t);
    return static_cast<int>(it - interior_.begin());
}

bool KnotVector::is_uniform(double tol) const {
    for (int i = 1; i < spans_; ++i)
        if (std::abs(interior_[static_cast<std::size_t>(i - 1)] - static_cast<double>(i) / spans_) > tol)
            return false;
    return true;
}

namespace {

double cox_de_boor(const KnotVector& kv, int p, int i, double t) {
    if (p == 0) {
        if (t >= kv.knot(i) && t < kv.knot(i + 1)) return 1.0;
        if (i == kv.spans() - 1 && t == 1.0) return 1.0;
        return 0.0;
    }
    double acc = 0.0;
    double da = kv.knot(i + p) - kv.knot(i);
    if (da > 0.0) acc += (t - kv.knot(i)) / da * cox_de_boor(kv, p - 1, i, t);
    double db = kv.knot(i + p + 1) - kv.knot(i + 1);
    if (db > 0.0) acc += (kv.knot(i + p + 1) - t) / db * cox_de_boor(kv, p - 1, i + 1, t);
    return acc;
}

}  // namespace

double eval_bspline(const KnotVector& kv, int i, double t) {
    if (i < -kv.degree() || i > kv.spans() - 1)
        throw std::invalid_argument("eval_bspline: basis index out of range");
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("eval_bspline: t outside [0,1]");
    return cox_de_boor(kv, kv.degree(), i, t);
}

int nonzero_bspline_values(const KnotVector& kv, double t, std::span<double> out) {
    const int d = kv.degree();
    if (out.size() < static_cast<std::size_t>(d + 1))
        throw std::invalid_argument("nonzero_bspline_values: output too small");
    const int j = kv.find_span(t);

    // Triangular scheme over the d+1 bases alive on span j. left/right hold
    // distances to the knots bracketing the span; the usual algorithm, with
    // knot indices offset so that span j starts at t_j. Span j is nonempty,
    // so no denominator vanishes.
    constexpr int kStack = 24;
    double lbuf[kStack], rbuf[kStack];
    std::vector<double> lheap, rheap;
    double *left = lbuf, *right = rbuf;
    if (d + 1 > kStack) {
        lheap.resize(static_cast<std::size_t>(d + 1));
        rheap.resize(static_cast<std::size_t>(d + 1));
        left = lheap.data();
        right = rheap.data();
    }
    out[0] = 1.0;
    for (int p = 1; p <= d; ++p) {
        left[p] = t - kv.knot(j + 1 - p);
        right[p] = kv.knot(j + p) - t;
        double saved = 0.0;
        for (int r = 0; r < p; ++r) {
            double temp = out[static_cast<std::size_t>(r)] / (right[r + 1] + left[p - r]);
            out[static_cast<std::size_t>(r)] = saved + right[r + 1] * temp;
            saved = left[p - r] * temp;
        }
        out[static_cast<std::size_t>(p)] = saved;
    }
    return j;
}

std::vector<double> bspline_row(const KnotVector& kv, double t) {
    const int d = kv.degree();
    std::vector<double> row(static_cast<std::size_t>(kv.basis_count()), 0.0);
    std::vector<double> vals(static_cast<std::size_t>(d + 1));
    int j = nonzero_bspline_values(kv, t, vals);
    // Basis i = j - d + a sits at position k = i + d = j + a.
    for (int a = 0; a <= d; ++a) row[static_cast<std::size_t>(j + a)] = vals[static_cast<std::size_t>(a)];
    return row;
}

}  // namespace bsc
