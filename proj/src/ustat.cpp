#include "ptail/ustat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ptail/error.hpp"
#include "ptail/kernels.hpp"

namespace ptail {

double kernel_h1(double x1, double x2, double u) {
    if (!(x1 > 0.0) || !(x2 > 0.0))
        throw std::domain_error("kernel_h1: observations must be positive");
    if (std::min(x1, x2) < u) return 0.0;
    return std::fabs(x1 - x2) / (x1 + x2);
}

std::size_t exceedance_count(const SortedSample& sample, double u) {
    return sample.size() - sample.first_at_least(u);
}

namespace {

EstimateResult assemble(const SortedSample& sample, double u, std::size_t m, double pair_sum) {
    const double n = static_cast<double>(sample.size());
    const double md = static_cast<double>(m);
    const double total_pairs = 0.5 * n * (n - 1.0);
    EstimateResult r;
    r.stats.u = u;
    r.stats.m = m;
    r.stats.u1 = pair_sum / total_pairs;
    r.stats.u2 = (0.5 * md * (md - 1.0)) / total_pairs;
    r.estimate.u = u;
    r.estimate.m = m;
    r.estimate.t_hat = r.stats.u1 / r.stats.u2;
    return r;
}

}  // namespace

EstimateResult brute_force_estimate(const SortedSample& sample, double u) {
    const std::size_t m = exceedance_count(sample, u);
    if (m < 2) throw insufficient_exceedances(m, 2);
    const auto xs = sample.values();
    double pair_sum = 0.0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            pair_sum += kernel_h1(xs[i], xs[j], u);
    return assemble(sample, u, m, pair_sum);
}

EstimateResult estimate_at(const SortedSample& sample, double u) {
    const std::size_t m = exceedance_count(sample, u);
    if (m < 2) throw insufficient_exceedances(m, 2);
    const std::size_t k0 = sample.size() - m;
    const double* ex = sample.data() + k0;
    const auto& k = kernels::active_table();
    double pair_sum = 0.0;
    for (std::size_t i = 0; i + 1 < m; ++i)
        pair_sum += k.pair_ratio_row(ex[i], ex + i + 1, m - i - 1).sum;
    return assemble(sample, u, m, pair_sum);
}

std::vector<TailEstimate> tail_curve(const SortedSample& sample, std::size_t k_max) {
    const std::size_t n = sample.size();
    if (k_max < 1 || k_max > n - 1)
        throw std::out_of_range("tail_curve: k_max must lie in [1, n-1]");
    const double* xs = sample.data();
    const auto& k = kernels::active_table();

    // suffix pair sums: T(i) = sum over pairs within xs[i..n)
    std::vector<double> suffix(n, 0.0);
    double acc = 0.0;
    for (std::size_t i = n - 1; i-- > 0;) {
        acc += k.pair_ratio_row(xs[i], xs + i + 1, n - i - 1).sum;
        suffix[i] = acc;
    }

    std::vector<TailEstimate> out;
    out.reserve(k_max);
    for (std::size_t kk = 1; kk <= k_max; ++kk) {
        const std::size_t m = n - kk + 1;
        TailEstimate e;
        e.u = xs[kk - 1];
        e.m = m;
        e.t_hat = suffix[kk - 1] / (0.5 * static_cast<double>(m) * static_cast<double>(m - 1));
        out.push_back(e);
    }
    return out;
}

}  // namespace ptail
