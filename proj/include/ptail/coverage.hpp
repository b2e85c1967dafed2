#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ptail/distributions.hpp"
#include "ptail/ustat.hpp"
#include "ptail/variance.hpp"

namespace ptail {

// Total sample size so that n * survival(u)^2 equals the requested effective
// size; minimum 4. Degenerate thresholds (survival 0) are rejected.
std::size_t required_n(const Distribution& dist, double u, double n_eff);

struct CoverageConfig {
    DistributionPtr dist;
    double u = 2.0;
    double n_eff = 20.0;
    double level = 0.95;
    std::size_t reps = 10000;
    std::vector<VarianceKind> methods = {VarianceKind::unbiased, VarianceKind::jackknife,
                                         VarianceKind::bootstrap};
    int bootstrap_reps = 999;
    std::uint64_t seed = 0;
    unsigned threads = 0;                // 0 = hardware concurrency
    std::optional<double> true_value;    // default: exact for Pareto I, numeric otherwise
};

struct MethodCoverage {
    VarianceKind kind = VarianceKind::unbiased;
    double coverage_pct = 0.0;   // of evaluated replicates
    double mc_se_pct = 0.0;      // sqrt(p(1-p)/evaluated) * 100
    double mean_ci_width = 0.0;
    std::size_t evaluated = 0;
    std::size_t dropped = 0;     // evaluated + dropped == reps
};

struct CoverageReport {
    std::string dist_name;
    double u = 0.0;
    double n_eff = 0.0;
    std::size_t n = 0;
    double level = 0.95;
    std::size_t reps = 0;
    std::uint64_t seed = 0;
    int bootstrap_reps = 0;
    double true_value = 0.0;
    std::vector<MethodCoverage> methods;
    bool high_drop_rate = false;  // >10% dropped for some method
};

CoverageReport run_coverage(const CoverageConfig& config);

// Figure-style simulated curves: three presets of three distributions each.
struct Figure2Curve {
    std::string label;
    std::vector<TailEstimate> points;  // at order statistics up to the 0.995 quantile
};

struct Figure2Result {
    std::string preset;
    std::vector<Figure2Curve> curves;
    double ref_t1 = 0.0;  // tail value at shape 1
    double ref_t2 = 0.0;  // tail value at shape 2
};

// preset: "pareto" | "loggamma" | "shiftedgamma"
Figure2Result figure2_curves(const std::string& preset, std::size_t n, std::uint64_t seed);

std::vector<std::string> figure2_presets();

}  // namespace ptail
