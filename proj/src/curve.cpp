#include "ptail/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ptail/error.hpp"
#include "ptail/kernels.hpp"
#include "ptail/special.hpp"
#include "ptail/tail_math.hpp"

namespace ptail {

VarianceKind default_plot_method(std::size_t n) {
    return n < 2000 ? VarianceKind::jackknife : VarianceKind::unbiased;
}

namespace {

double implied_alpha(double t_hat) {
    if (t_hat <= 0.0) return std::numeric_limits<double>::infinity();
    if (t_hat >= 1.0) return 0.0;
    try {
        return invert_tail_value(t_hat);
    } catch (const bracket_error&) {
        return t_hat > 0.5 ? 1e-8 : 1e8;
    }
}

}  // namespace

std::vector<TailCurvePoint> build_tail_curve(const SortedSample& sample,
                                             const PlotOptions& opts) {
    const std::size_t n = sample.size();
    const double u_cap = sample.quantile(opts.quantile_cap);
    const VarianceKind kind = opts.method.value_or(default_plot_method(n));
    const double z = opts.with_ci ? normal_quantile(0.5 + 0.5 * opts.level) : 0.0;
    const double* xs = sample.data();
    const auto& kern = kernels::active_table();

    const double nd = static_cast<double>(n);
    const double nn = nd * (nd - 1.0);
    const double nf4 = nn * (nd - 2.0) * (nd - 3.0);
    const double fac = (4.0 * nd - 6.0) / ((nd - 2.0) * (nd - 3.0));

    // sweep the threshold downward through the order statistics, maintaining
    // row sums s[i] = sum_{j >= k, j != i} h(x_i, x_j) for the current k
    std::vector<double> s(n, 0.0);
    double sum2t = 0.0;  // 2T = sum_i s[i]
    double c2 = 0.0;     // sum_{i != j} h^2

    std::vector<TailCurvePoint> out;
    out.reserve(n - 1);

    for (std::size_t p = n - 1; p-- > 0;) {  // p = k-1 (0-based pivot)
        const auto acc = kern.pair_ratio_accumulate(xs[p], xs + p + 1, s.data() + p + 1,
                                                    n - p - 1);
        s[p] = acc.sum;
        sum2t += 2.0 * acc.sum;
        c2 += 2.0 * acc.sum_sq;

        if (xs[p] > u_cap) continue;
        const std::size_t m = n - p;
        const double md = static_cast<double>(m);
        const double u1 = sum2t / nn;
        const double u2 = md * (md - 1.0) / nn;
        const double t_hat = u1 / u2;

        TailCurvePoint pt;
        pt.u = xs[p];
        pt.m = m;
        pt.t_hat = t_hat;
        pt.alpha_hat = implied_alpha(t_hat);

        double s2 = -1.0;  // negative: method unavailable at this point
        if (opts.with_ci) {
            switch (kind) {
                case VarianceKind::unbiased:
                    if (m >= 4) {
                        const double c1 = kern.sum_squares(s.data() + p, m);
                        const double v11 = (4.0 * c1 - 2.0 * c2) / nf4 - fac * u1 * u1;
                        const double v12 =
                            (4.0 * (md - 1.0) * sum2t - 2.0 * sum2t) / nf4 - fac * u1 * u2;
                        const double v22 =
                            (4.0 * md * (md - 1.0) * (md - 1.0) - 2.0 * md * (md - 1.0)) / nf4 -
                            fac * u2 * u2;
                        s2 = std::max(0.0, nd / u2 * (v11 - 2.0 * t_hat * v12 +
                                                      t_hat * t_hat * v22));
                    }
                    break;
                case VarianceKind::jackknife:
                    if (m >= 3) {
                        const double total = 0.5 * sum2t;
                        const double pairs_m1 = 0.5 * (md - 1.0) * (md - 2.0);
                        double mean = 0.0;
                        for (std::size_t i = p; i < n; ++i)
                            mean += (total - s[i]) / pairs_m1;
                        mean /= md;
                        double ss = 0.0;
                        for (std::size_t i = p; i < n; ++i) {
                            const double d = (total - s[i]) / pairs_m1 - mean;
                            ss += d * d;
                        }
                        s2 = nd * u2 * ((md - 1.0) / md * ss);
                    }
                    break;
                case VarianceKind::bootstrap:
                    if (m >= 2) {
                        try {
                            s2 = sigma_hat_bootstrap(
                                sample, xs[p],
                                static_cast<std::size_t>(opts.bootstrap_reps),
                                opts.seed + static_cast<std::uint64_t>(p));
                        } catch (const unstable_bootstrap&) {
                            s2 = -1.0;
                        }
                    }
                    break;
            }
        }
        if (s2 >= 0.0) {
            const double hw = z * std::sqrt(s2) / std::sqrt(nd * u2);
            pt.lo = std::max(t_hat - hw, 0.0);
            pt.hi = std::min(t_hat + hw, 1.0);
        } else {
            pt.lo = pt.hi = t_hat;
        }
        out.push_back(pt);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace ptail
