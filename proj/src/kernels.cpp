#include "ptail/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

namespace ptail::kernels {

RowAccum pair_ratio_row_scalar(double pivot, const double* xs, std::size_t n) noexcept {
    RowAccum out;
    for (std::size_t j = 0; j < n; ++j) {
        const double h = std::fabs(xs[j] - pivot) / (xs[j] + pivot);
        out.sum += h;
        out.sum_sq += h * h;
    }
    return out;
}

RowAccum pair_ratio_accumulate_scalar(double pivot, const double* xs, double* acc,
                                      std::size_t n) noexcept {
    RowAccum out;
    for (std::size_t j = 0; j < n; ++j) {
        const double h = std::fabs(xs[j] - pivot) / (xs[j] + pivot);
        acc[j] += h;
        out.sum += h;
        out.sum_sq += h * h;
    }
    return out;
}

double sum_squares_scalar(const double* xs, std::size_t n) noexcept {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += xs[j] * xs[j];
    return s;
}

double dot_scalar(const double* a, const double* b, std::size_t n) noexcept {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += a[j] * b[j];
    return s;
}

const KernelTable& scalar_table() noexcept {
    static const KernelTable table = {pair_ratio_row_scalar, pair_ratio_accumulate_scalar,
                                      sum_squares_scalar, dot_scalar, "scalar"};
    return table;
}

namespace {

bool env_forces_scalar() noexcept {
    const char* v = std::getenv("PTAIL_KERNELS");
    return v != nullptr && std::strcmp(v, "scalar") == 0;
}

const KernelTable& detect() noexcept {
    if (env_forces_scalar()) return scalar_table();
#if defined(PTAIL_HAVE_AVX2)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
        static const KernelTable avx2 = {pair_ratio_row_avx2, pair_ratio_accumulate_avx2,
                                         sum_squares_avx2, dot_avx2, "avx2"};
        return avx2;
    }
#endif
#if defined(__aarch64__) || defined(__ARM_NEON)
    {
        static const KernelTable neon = {pair_ratio_row_neon, pair_ratio_accumulate_neon,
                                         sum_squares_neon, dot_neon, "neon"};
        return neon;
    }
#endif
    return scalar_table();
}

}  // namespace

const KernelTable& active_table() noexcept {
    static const KernelTable& table = detect();
    return table;
}

bool variant_available(const char* name) noexcept {
#if defined(PTAIL_HAVE_AVX2)
    if (std::strcmp(name, "avx2") == 0)
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#endif
#if defined(__aarch64__) || defined(__ARM_NEON)
    if (std::strcmp(name, "neon") == 0) return true;
#endif
    (void)name;
    return false;
}

}  // namespace ptail::kernels
