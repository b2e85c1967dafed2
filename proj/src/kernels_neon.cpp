// NEON kernel variants for aarch64.

#include "ptail/kernels.hpp"

#if defined(__aarch64__) || defined(__ARM_NEON)

#include <arm_neon.h>

namespace ptail::kernels {

RowAccum pair_ratio_row_neon(double pivot, const double* xs, std::size_t n) noexcept {
    const float64x2_t vp = vdupq_n_f64(pivot);
    float64x2_t acc = vdupq_n_f64(0.0);
    float64x2_t acc_sq = vdupq_n_f64(0.0);
    std::size_t j = 0;
    for (; j + 2 <= n; j += 2) {
        const float64x2_t v = vld1q_f64(xs + j);
        const float64x2_t num = vabsq_f64(vsubq_f64(v, vp));
        const float64x2_t h = vdivq_f64(num, vaddq_f64(v, vp));
        acc = vaddq_f64(acc, h);
        acc_sq = vfmaq_f64(acc_sq, h, h);
    }
    RowAccum out{vaddvq_f64(acc), vaddvq_f64(acc_sq)};
    for (; j < n; ++j) {
        const double h = (xs[j] > pivot ? xs[j] - pivot : pivot - xs[j]) / (xs[j] + pivot);
        out.sum += h;
        out.sum_sq += h * h;
    }
    return out;
}

RowAccum pair_ratio_accumulate_neon(double pivot, const double* xs, double* acc_out,
                                    std::size_t n) noexcept {
    const float64x2_t vp = vdupq_n_f64(pivot);
    float64x2_t acc = vdupq_n_f64(0.0);
    float64x2_t acc_sq = vdupq_n_f64(0.0);
    std::size_t j = 0;
    for (; j + 2 <= n; j += 2) {
        const float64x2_t v = vld1q_f64(xs + j);
        const float64x2_t num = vabsq_f64(vsubq_f64(v, vp));
        const float64x2_t h = vdivq_f64(num, vaddq_f64(v, vp));
        vst1q_f64(acc_out + j, vaddq_f64(vld1q_f64(acc_out + j), h));
        acc = vaddq_f64(acc, h);
        acc_sq = vfmaq_f64(acc_sq, h, h);
    }
    RowAccum out{vaddvq_f64(acc), vaddvq_f64(acc_sq)};
    for (; j < n; ++j) {
        const double h = (xs[j] > pivot ? xs[j] - pivot : pivot - xs[j]) / (xs[j] + pivot);
        acc_out[j] += h;
        out.sum += h;
        out.sum_sq += h * h;
    }
    return out;
}

double sum_squares_neon(const double* xs, std::size_t n) noexcept {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t j = 0;
    for (; j + 2 <= n; j += 2) {
        const float64x2_t v = vld1q_f64(xs + j);
        acc = vfmaq_f64(acc, v, v);
    }
    double s = vaddvq_f64(acc);
    for (; j < n; ++j) s += xs[j] * xs[j];
    return s;
}

double dot_neon(const double* a, const double* b, std::size_t n) noexcept {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t j = 0;
    for (; j + 2 <= n; j += 2) {
        acc = vfmaq_f64(acc, vld1q_f64(a + j), vld1q_f64(b + j));
    }
    double s = vaddvq_f64(acc);
    for (; j < n; ++j) s += a[j] * b[j];
    return s;
}

}  // namespace ptail::kernels

#endif  // aarch64 / ARM_NEON
