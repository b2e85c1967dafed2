#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "ptail/sample.hpp"

namespace ptail {

enum class VarianceKind { unbiased, jackknife, bootstrap };

std::string to_string(VarianceKind kind);
VarianceKind variance_kind_from_string(const std::string& name);  // accepts "plugin" alias

struct VarianceMethod {
    VarianceKind kind = VarianceKind::jackknife;
    int bootstrap_reps = 999;
    std::uint64_t seed = 0;
};

struct ConfidenceInterval {
    double level = 0.95;
    double lo = 0.0;
    double hi = 1.0;
    double sigma_hat = 0.0;  // on the sqrt(n nu_u) scale of the CLT
    double t_hat = 0.0;
    double u = 0.0;
    std::size_t m = 0;
    VarianceMethod method;
};

// Minimum-variance unbiased estimator of Var(U_n) for a symmetric degree-2
// kernel, via the O(n^2) row-sum form
//   (4 C1^2 - 2 C2^2)/n_(4) - (4n-6)/((n-2)(n-3)) U_n^2.
// May be negative at small n; returned as-is.
double ustat_var_unbiased(const SortedSample& sample,
                          const std::function<double(double, double)>& kernel);

// Off-diagonal entry of the multivariate version for a kernel pair.
double ustat_cov_unbiased(const SortedSample& sample,
                          const std::function<double(double, double)>& kernel1,
                          const std::function<double(double, double)>& kernel2);

// Plug-in estimate of sigma_u^2 combining the unbiased variance/covariance
// estimators of (U^(1), U^(2)); floored at 0. Needs m >= 4 exceedances.
double sigma_hat_plugin(const SortedSample& sample, double u);

// Delete-one jackknife over the m exceedances (removing a non-exceedance
// leaves t_hat unchanged). The direct form estimates Var(t_hat); sigma_hat_*
// rescales by n U^(2) onto the CLT normalization shared by all methods.
double jackknife_variance_direct(const SortedSample& sample, double u);
double sigma_hat_jackknife(const SortedSample& sample, double u);

// Full-sample bootstrap: each replicate redraws n observations with
// replacement and re-estimates t_hat at the same u; replicates with fewer
// than 2 exceedances are dropped (unstable_bootstrap if more than half drop).
// Deterministic given the seed.
struct BootstrapStats {
    double sigma_sq = 0.0;       // rescaled, CLT normalization
    double sigma_sq_direct = 0.0;
    std::size_t dropped = 0;
    std::size_t reps = 0;
};
BootstrapStats bootstrap_variance(const SortedSample& sample, double u, std::size_t reps,
                                  std::uint64_t seed);
double sigma_hat_bootstrap(const SortedSample& sample, double u, std::size_t reps,
                           std::uint64_t seed);

// Symmetric normal interval around t_hat with half-width
// z_{1-gamma/2} sigma_hat / sqrt(n U^(2)), clipped to [0,1].
ConfidenceInterval confidence_interval(const SortedSample& sample, double u, double level,
                                       const VarianceMethod& method);

}  // namespace ptail
