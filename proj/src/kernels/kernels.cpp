#include "bsc/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace bsc::kernels {

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double weighted_dot_scalar(const double* w, const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += w[i] * a[i] * b[i];
    return acc;
}

void matvec_scalar(const double* m, std::size_t rows, std::size_t cols, const double* x,
                   double* y) {
    for (std::size_t r = 0; r < rows; ++r) y[r] = dot_scalar(m + r * cols, x, cols);
}

constexpr Ops kScalarOps{dot_scalar, weighted_dot_scalar, matvec_scalar};

}  // namespace

namespace detail {
// Defined in the per-architecture translation units.
bool avx2_available();
const Ops& avx2_ops();
bool neon_available();
const Ops& neon_ops();
}  // namespace detail

std::string_view backend_name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
        case Backend::neon: return "neon";
    }
    return "unknown";
}

const Ops& ops(Backend b) {
    switch (b) {
        case Backend::scalar: return kScalarOps;
        case Backend::avx2:
            if (detail::avx2_available()) return detail::avx2_ops();
            break;
        case Backend::neon:
            if (detail::neon_available()) return detail::neon_ops();
            break;
    }
    throw std::invalid_argument("kernel backend not available: " +
                                std::string(backend_name(b)));
}

std::vector<Backend> available_backends() {
    std::vector<Backend> out{Backend::scalar};
    if (detail::avx2_available()) out.push_back(Backend::avx2);
    if (detail::neon_available()) out.push_back(Backend::neon);
    return out;
}

namespace {

struct Dispatch {
    const Ops* table;
    Backend backend;
};

Backend initial_backend() {
    if (const char* env = std::getenv("BSC_KERNELS")) {
        std::string_view name(env);
        for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon})
            if (name == backend_name(b)) return b;
        throw std::invalid_argument("BSC_KERNELS: unknown backend '" + std::string(name) + "'");
    }
    if (detail::avx2_available()) return Backend::avx2;
    if (detail::neon_available()) return Backend::neon;
    return Backend::scalar;
}

Dispatch& dispatch() {
    static Dispatch d = [] {
        Backend b = initial_backend();
        return Dispatch{&ops(b), b};
    }();
    return d;
}

}  // namespace

const Ops& active_ops() { return *dispatch().table; }

Backend active_backend() { return dispatch().backend; }

void force_backend(Backend b) {
    const Ops& table = ops(b);
    dispatch() = Dispatch{&table, b};
}

double bilinear(std::span<const double> x, std::span<const double> m,
                std::span<const double> y) {
    constexpr std::size_t kStack = 64;
    double buf[kStack];
    std::vector<double> heap;
    double* tmp = buf;
    if (x.size() > kStack) {
        heap.resize(x.size());
        tmp = heap.data();
    }
    const Ops& k = active_ops();
    k.matvec(m.data(), x.size(), y.size(), y.data(), tmp);
    return k.dot(x.data(), tmp, x.size());
}

}  // namespace bsc::kernels
