#pragma once

#include <cstddef>
#include <vector>

#include "ptail/sample.hpp"

namespace ptail {

// Degree-2 kernel |x1-x2|/(x1+x2) gated on min(x1,x2) >= u.
double kernel_h1(double x1, double x2, double u);

// m = #{X_i >= u}, by binary search.
std::size_t exceedance_count(const SortedSample& sample, double u);

struct PairStats {
    double u = 0.0;
    double u1 = 0.0;     // U_n^(1)(u)
    double u2 = 0.0;     // U_n^(2)(u) = m(m-1)/(n(n-1))
    std::size_t m = 0;   // exceedance count
};

struct TailEstimate {
    double u = 0.0;
    std::size_t m = 0;
    double t_hat = 0.0;  // U1/U2, in [0,1)
};

struct EstimateResult {
    PairStats stats;
    TailEstimate estimate;
};

// Reference estimator: literal double loop over all n(n-1)/2 pairs.
// Requires m >= 2 (insufficient_exceedances otherwise).
EstimateResult brute_force_estimate(const SortedSample& sample, double u);

// Same values through the O(m^2) row-sum kernels; production path.
EstimateResult estimate_at(const SortedSample& sample, double u);

// t_hat at the order statistics X_(k), k = 1..k_max (1-based), in O(n^2)
// total time. The pair sums are accumulated as suffix sums of per-row sums
// (only nonnegative additions), which is algebraically the paper's downward
// recursion but free of its subtractive cancellation.
std::vector<TailEstimate> tail_curve(const SortedSample& sample, std::size_t k_max);

}  // namespace ptail
