#include "bsc/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace bsc::kernels::detail {

namespace {

__attribute__((target("avx2,fma"))) double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

__attribute__((target("avx2,fma"))) double dot_avx2(const double* a, const double* b,
                                                    std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    if (i + 4 <= n) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        i += 4;
    }
    double out = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) out += a[i] * b[i];
    return out;
}

__attribute__((target("avx2,fma"))) double weighted_dot_avx2(const double* w, const double* a,
                                                             const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d wa = _mm256_mul_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(a + i));
        acc = _mm256_fmadd_pd(wa, _mm256_loadu_pd(b + i), acc);
    }
    double out = hsum(acc);
    for (; i < n; ++i) out += w[i] * a[i] * b[i];
    return out;
}

__attribute__((target("avx2,fma"))) void matvec_avx2(const double* m, std::size_t rows,
                                                     std::size_t cols, const double* x,
                                                     double* y) {
    for (std::size_t r = 0; r < rows; ++r) y[r] = dot_avx2(m + r * cols, x, cols);
}

constexpr Ops kAvx2Ops{dot_avx2, weighted_dot_avx2, matvec_avx2};

}  // namespace

bool avx2_available() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

const Ops& avx2_ops() { return kAvx2Ops; }

}  // namespace bsc::kernels::detail

#else

namespace bsc::kernels::detail {

bool avx2_available() { return false; }

const Ops& avx2_ops() {
    static Ops none{nullptr, nullptr, nullptr};
    return none;
}

}  // namespace bsc::kernels::detail

#endif
