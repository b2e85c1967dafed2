// AVX2 kernel variants; this translation unit is compiled with -mavx2 -mfma
// and its functions are only entered after the runtime cpuid check.

#include "ptail/kernels.hpp"

#if defined(PTAIL_HAVE_AVX2)

#include <immintrin.h>

namespace ptail::kernels {

namespace {

inline double hsum(__m256d v) noexcept {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

const __m256d kAbsMask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));

}  // namespace

RowAccum pair_ratio_row_avx2(double pivot, const double* xs, std::size_t n) noexcept {
    const __m256d vp = _mm256_set1_pd(pivot);
    __m256d acc = _mm256_setzero_pd();
    __m256d acc_sq = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        const __m256d v = _mm256_loadu_pd(xs + j);
        const __m256d num = _mm256_and_pd(_mm256_sub_pd(v, vp), kAbsMask);
        const __m256d h = _mm256_div_pd(num, _mm256_add_pd(v, vp));
        acc = _mm256_add_pd(acc, h);
        acc_sq = _mm256_fmadd_pd(h, h, acc_sq);
    }
    RowAccum out{hsum(acc), hsum(acc_sq)};
    for (; j < n; ++j) {
        const double h = (xs[j] > pivot ? xs[j] - pivot : pivot - xs[j]) / (xs[j] + pivot);
        out.sum += h;
        out.sum_sq += h * h;
    }
    return out;
}

RowAccum pair_ratio_accumulate_avx2(double pivot, const double* xs, double* acc_out,
                                    std::size_t n) noexcept {
    const __m256d vp = _mm256_set1_pd(pivot);
    __m256d acc = _mm256_setzero_pd();
    __m256d acc_sq = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        const __m256d v = _mm256_loadu_pd(xs + j);
        const __m256d num = _mm256_and_pd(_mm256_sub_pd(v, vp), kAbsMask);
        const __m256d h = _mm256_div_pd(num, _mm256_add_pd(v, vp));
        _mm256_storeu_pd(acc_out + j, _mm256_add_pd(_mm256_loadu_pd(acc_out + j), h));
        acc = _mm256_add_pd(acc, h);
        acc_sq = _mm256_fmadd_pd(h, h, acc_sq);
    }
    RowAccum out{hsum(acc), hsum(acc_sq)};
    for (; j < n; ++j) {
        const double h = (xs[j] > pivot ? xs[j] - pivot : pivot - xs[j]) / (xs[j] + pivot);
        acc_out[j] += h;
        out.sum += h;
        out.sum_sq += h * h;
    }
    return out;
}

double sum_squares_avx2(const double* xs, std::size_t n) noexcept {
    __m256d acc = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        const __m256d v = _mm256_loadu_pd(xs + j);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double s = hsum(acc);
    for (; j < n; ++j) s += xs[j] * xs[j];
    return s;
}

double dot_avx2(const double* a, const double* b, std::size_t n) noexcept {
    __m256d acc = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + j), _mm256_loadu_pd(b + j), acc);
    }
    double s = hsum(acc);
    for (; j < n; ++j) s += a[j] * b[j];
    return s;
}

}  // namespace ptail::kernels

#endif  // PTAIL_HAVE_AVX2
