#include "bsc/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace bsc::kernels::detail {

namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
    }
    if (i + 2 <= n) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
        i += 2;
    }
    double out = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) out += a[i] * b[i];
    return out;
}

double weighted_dot_neon(const double* w, const double* a, const double* b, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t wa = vmulq_f64(vld1q_f64(w + i), vld1q_f64(a + i));
        acc = vfmaq_f64(acc, wa, vld1q_f64(b + i));
    }
    double out = vaddvq_f64(acc);
    for (; i < n; ++i) out += w[i] * a[i] * b[i];
    return out;
}

void matvec_neon(const double* m, std::size_t rows, std::size_t cols, const double* x,
                 double* y) {
    for (std::size_t r = 0; r < rows; ++r) y[r] = dot_neon(m + r * cols, x, cols);
}

constexpr Ops kNeonOps{dot_neon, weighted_dot_neon, matvec_neon};

}  // namespace

// NEON is baseline on aarch64.
bool neon_available() { return true; }

const Ops& neon_ops() { return kNeonOps; }

}  // namespace bsc::kernels::detail

#else

namespace bsc::kernels::detail {

bool neon_available() { return false; }

const Ops& neon_ops() {
    static Ops none{nullptr, nullptr, nullptr};
    return none;
}

}  // namespace bsc::kernels::detail

#endif
