#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace bsc::kernels {

/// Function table for the dense inner loops (copula grids, bilinear forms,
/// sample statistics). Pointers need no particular alignment.
struct Ops {
    double (*dot)(const double* a, const double* b, std::size_t n);
    // sum_i w[i] * a[i] * b[i]
    double (*weighted_dot)(const double* w, const double* a, const double* b, std::size_t n);
    // y = M x, M row-major rows x cols
    void (*matvec)(const double* m, std::size_t rows, std::size_t cols, const double* x,
                   double* y);
};

enum class Backend { scalar, avx2, neon };

std::string_view backend_name(Backend b);

// Table for a specific backend; throws std::invalid_argument when the
// backend is not available on this machine.
const Ops& ops(Backend b);

// Backend picked at startup: best available, unless the BSC_KERNELS
// environment variable ("scalar", "avx2", "neon") overrides the choice.
const Ops& active_ops();
Backend active_backend();
std::vector<Backend> available_backends();

// Replaces the active table. Intended for tests; not thread-safe against
// concurrent kernel calls.
void force_backend(Backend b);

inline double dot(std::span<const double> a, std::span<const double> b) {
    return active_ops().dot(a.data(), b.data(), a.size());
}

inline double weighted_dot(std::span<const double> w, std::span<const double> a,
                           std::span<const double> b) {
    return active_ops().weighted_dot(w.data(), a.data(), b.data(), w.size());
}

inline void matvec(std::span<const double> m, std::size_t rows, std::size_t cols,
                   std::span<const double> x, std::span<double> y) {
    active_ops().matvec(m.data(), rows, cols, x.data(), y.data());
}

// x^T M y with M row-major, x.size() rows and y.size() columns.
double bilinear(std::span<const double> x, std::span<const double> m, std::span<const double> y);

}  // namespace bsc::kernels
