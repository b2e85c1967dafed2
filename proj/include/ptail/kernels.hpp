#pragma once

#include <cstddef>

// Data-parallel inner loops shared by the pair-sum estimators and the
// variance machinery. Each kernel has a scalar reference implementation and
// vector variants (AVX2 on x86-64, NEON on aarch64) selected once at runtime;
// the variants are equivalence-tested against the scalar reference.
//
// The per-element ratio |x - pivot| / (x + pivot) is built from correctly
// rounded IEEE operations, so scalar and vector variants produce bit-identical
// element values; only the accumulation order of the reductions differs.

namespace ptail::kernels {

struct RowAccum {
    double sum = 0.0;     // sum of |x_j - pivot| / (x_j + pivot)
    double sum_sq = 0.0;  // sum of squares of the same ratios
};

// --- scalar reference kernels ---

// Row of pair ratios against a fixed pivot. A pivot contained in the span
// contributes 0 (|p-p| = 0), so callers may pass full rows.
RowAccum pair_ratio_row_scalar(double pivot, const double* xs, std::size_t n) noexcept;

// Same row, additionally accumulating each ratio into acc[j].
RowAccum pair_ratio_accumulate_scalar(double pivot, const double* xs, double* acc,
                                      std::size_t n) noexcept;

double sum_squares_scalar(const double* xs, std::size_t n) noexcept;

double dot_scalar(const double* a, const double* b, std::size_t n) noexcept;

// --- vector variants (defined only where the target supports them) ---

#if defined(PTAIL_HAVE_AVX2)
RowAccum pair_ratio_row_avx2(double pivot, const double* xs, std::size_t n) noexcept;
RowAccum pair_ratio_accumulate_avx2(double pivot, const double* xs, double* acc,
                                    std::size_t n) noexcept;
double sum_squares_avx2(const double* xs, std::size_t n) noexcept;
double dot_avx2(const double* a, const double* b, std::size_t n) noexcept;
#endif

#if defined(__aarch64__) || defined(__ARM_NEON)
RowAccum pair_ratio_row_neon(double pivot, const double* xs, std::size_t n) noexcept;
RowAccum pair_ratio_accumulate_neon(double pivot, const double* xs, double* acc,
                                    std::size_t n) noexcept;
double sum_squares_neon(const double* xs, std::size_t n) noexcept;
double dot_neon(const double* a, const double* b, std::size_t n) noexcept;
#endif

// --- runtime dispatch ---

struct KernelTable {
    RowAccum (*pair_ratio_row)(double, const double*, std::size_t) noexcept;
    RowAccum (*pair_ratio_accumulate)(double, const double*, double*, std::size_t) noexcept;
    double (*sum_squares)(const double*, std::size_t) noexcept;
    double (*dot)(const double*, const double*, std::size_t) noexcept;
    const char* name;
};

const KernelTable& scalar_table() noexcept;

// Best table for this CPU, detected once. PTAIL_KERNELS=scalar in the
// environment forces the reference implementation.
const KernelTable& active_table() noexcept;

// True when the named vector variant can run on this CPU ("avx2", "neon").
bool variant_available(const char* name) noexcept;

}  // namespace ptail::kernels
