#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ptail/sample.hpp"
#include "ptail/variance.hpp"

namespace ptail {

struct TailCurvePoint {
    double u = 0.0;
    std::size_t m = 0;
    double t_hat = 0.0;
    double lo = 0.0;
    double hi = 1.0;
    double alpha_hat = 0.0;  // inverse tail value; +inf when t_hat == 0
};

struct PlotOptions {
    double quantile_cap = 0.995;            // drop thresholds above this sample quantile
    double level = 0.95;                    // CI level
    std::optional<VarianceKind> method;     // default: jackknife below 2000 obs, plug-in above
    int bootstrap_reps = 999;
    std::uint64_t seed = 0;
    bool with_ci = true;
};

VarianceKind default_plot_method(std::size_t n);

// Full tail plot: t_hat with CI bounds and the implied Pareto shape at every
// order statistic X_(k) with at least 2 exceedances, capped at the quantile.
// Plug-in and jackknife CIs are produced by one O(n^2) sweep that maintains
// the per-row kernel sums incrementally as the threshold moves down; points
// where the variance method's preconditions fail get the degenerate interval
// [t_hat, t_hat].
std::vector<TailCurvePoint> build_tail_curve(const SortedSample& sample,
                                             const PlotOptions& opts);

}  // namespace ptail
