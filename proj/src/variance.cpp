#include "ptail/variance.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <vector>

#include "ptail/error.hpp"
#include "ptail/kernels.hpp"
#include "ptail/rng.hpp"
#include "ptail/special.hpp"
#include "ptail/ustat.hpp"

namespace ptail {

std::string to_string(VarianceKind kind) {
    switch (kind) {
        case VarianceKind::unbiased: return "plugin";
        case VarianceKind::jackknife: return "jackknife";
        case VarianceKind::bootstrap: return "bootstrap";
    }
    return "?";
}

VarianceKind variance_kind_from_string(const std::string& name) {
    if (name == "unbiased" || name == "plugin") return VarianceKind::unbiased;
    if (name == "jackknife") return VarianceKind::jackknife;
    if (name == "bootstrap") return VarianceKind::bootstrap;
    throw std::invalid_argument("unknown variance method '" + name +
                                "' (expected plugin|jackknife|bootstrap)");
}

namespace {

struct UnbiasedParts {
    double nf4;  // n(n-1)(n-2)(n-3)
    double fac;  // (4n-6)/((n-2)(n-3))
};

UnbiasedParts parts(std::size_t n_) {
    const double n = static_cast<double>(n_);
    return {n * (n - 1.0) * (n - 2.0) * (n - 3.0), (4.0 * n - 6.0) / ((n - 2.0) * (n - 3.0))};
}

}  // namespace

double ustat_var_unbiased(const SortedSample& sample,
                          const std::function<double(double, double)>& kernel) {
    const std::size_t n = sample.size();
    if (n < 4) throw insufficient_sample(n, 4);
    const auto xs = sample.values();
    double c1 = 0.0, c2 = 0.0, total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double si = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const double h = kernel(xs[i], xs[j]);
            si += h;
            c2 += h * h;
        }
        c1 += si * si;
        total += si;
    }
    const double u = total / (static_cast<double>(n) * (static_cast<double>(n) - 1.0));
    const auto p = parts(n);
    return (4.0 * c1 - 2.0 * c2) / p.nf4 - p.fac * u * u;
}

double ustat_cov_unbiased(const SortedSample& sample,
                          const std::function<double(double, double)>& kernel1,
                          const std::function<double(double, double)>& kernel2) {
    const std::size_t n = sample.size();
    if (n < 4) throw insufficient_sample(n, 4);
    const auto xs = sample.values();
    double c1x = 0.0, c2x = 0.0, total1 = 0.0, total2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double s1 = 0.0, s2 = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const double h1 = kernel1(xs[i], xs[j]);
            const double h2 = kernel2(xs[i], xs[j]);
            s1 += h1;
            s2 += h2;
            c2x += h1 * h2;
        }
        c1x += s1 * s2;
        total1 += s1;
        total2 += s2;
    }
    const double nn = static_cast<double>(n) * (static_cast<double>(n) - 1.0);
    const auto p = parts(n);
    return (4.0 * c1x - 2.0 * c2x) / p.nf4 - p.fac * (total1 / nn) * (total2 / nn);
}

namespace {

// Shared row-sum pass over the exceedance block. h^(1) vanishes off the
// block, and h^(2) row sums have the closed form (m-1), so all five
// Appendix-C accumulators reduce to these three numbers.
struct ExceedancePass {
    std::size_t n = 0, m = 0;
    const double* ex = nullptr;     // exceedance block
    double sum2t = 0.0;             // sum_i S_i = 2T
    double c2 = 0.0;                // sum_{i != j} h^2
    double c1 = 0.0;                // sum_i S_i^2
    std::vector<double> row_sums;   // S_i per exceedance
    double u1 = 0.0, u2 = 0.0, t_hat = 0.0;
};

ExceedancePass exceedance_pass(const SortedSample& sample, double u, std::size_t min_m) {
    ExceedancePass out;
    out.n = sample.size();
    out.m = exceedance_count(sample, u);
    if (out.m < min_m) throw insufficient_exceedances(out.m, min_m);
    const std::size_t k0 = out.n - out.m;
    out.ex = sample.data() + k0;
    out.row_sums.assign(out.m, 0.0);

    const auto& k = kernels::active_table();
    // row i against the later block; mirror contributions keep S_j complete
    for (std::size_t i = 0; i + 1 < out.m; ++i) {
        const auto acc = k.pair_ratio_accumulate(out.ex[i], out.ex + i + 1,
                                                 out.row_sums.data() + i + 1, out.m - i - 1);
        out.row_sums[i] += acc.sum;
        out.sum2t += 2.0 * acc.sum;
        out.c2 += 2.0 * acc.sum_sq;
    }
    out.c1 = k.sum_squares(out.row_sums.data(), out.m);

    const double nn = static_cast<double>(out.n) * (static_cast<double>(out.n) - 1.0);
    const double md = static_cast<double>(out.m);
    out.u1 = out.sum2t / nn;
    out.u2 = md * (md - 1.0) / nn;
    out.t_hat = out.u1 / out.u2;
    return out;
}

}  // namespace

double sigma_hat_plugin(const SortedSample& sample, double u) {
    const auto ep = exceedance_pass(sample, u, 4);
    const auto p = parts(ep.n);
    const double md = static_cast<double>(ep.m);

    const double v11 = (4.0 * ep.c1 - 2.0 * ep.c2) / p.nf4 - p.fac * ep.u1 * ep.u1;
    const double v12 =
        (4.0 * (md - 1.0) * ep.sum2t - 2.0 * ep.sum2t) / p.nf4 - p.fac * ep.u1 * ep.u2;
    const double v22 = (4.0 * md * (md - 1.0) * (md - 1.0) - 2.0 * md * (md - 1.0)) / p.nf4 -
                       p.fac * ep.u2 * ep.u2;

    const double s2 = static_cast<double>(ep.n) / ep.u2 *
                      (v11 - 2.0 * ep.t_hat * v12 + ep.t_hat * ep.t_hat * v22);
    return std::max(s2, 0.0);
}

namespace {

// Leave-one-out values come straight from the row sums: deleting exceedance i
// removes exactly the pairs it participates in, whose kernel total is S_i.
double jackknife_direct_from_pass(const ExceedancePass& ep) {
    const double md = static_cast<double>(ep.m);
    const double total = 0.5 * ep.sum2t;
    const double pairs_m1 = 0.5 * (md - 1.0) * (md - 2.0);

    double mean = 0.0;
    for (std::size_t i = 0; i < ep.m; ++i) mean += (total - ep.row_sums[i]) / pairs_m1;
    mean /= md;
    double ss = 0.0;
    for (std::size_t i = 0; i < ep.m; ++i) {
        const double d = (total - ep.row_sums[i]) / pairs_m1 - mean;
        ss += d * d;
    }
    return (md - 1.0) / md * ss;
}

}  // namespace

double jackknife_variance_direct(const SortedSample& sample, double u) {
    return jackknife_direct_from_pass(exceedance_pass(sample, u, 3));
}

double sigma_hat_jackknife(const SortedSample& sample, double u) {
    const auto ep = exceedance_pass(sample, u, 3);
    return static_cast<double>(ep.n) * ep.u2 * jackknife_direct_from_pass(ep);
}

namespace {

constexpr std::size_t kHMatrixMaxM = 2048;

// t_hat over a with-replacement redraw of the exceedance block. The count of
// exceedances in a full-sample redraw is Binomial(n, m/n) and, given the
// count, the values are uniform draws from the observed exceedances; sampling
// that way directly avoids touching the n - m censored observations.
class BootstrapReplicator {
public:
    BootstrapReplicator(const double* ex, std::size_t m) : ex_(ex), m_(m) {
        if (m <= kHMatrixMaxM) {
            h_.assign(m * m, 0.0);
            for (std::size_t i = 0; i < m; ++i) {
                for (std::size_t j = i + 1; j < m; ++j) {
                    const double h = (ex[j] - ex[i]) / (ex[j] + ex[i]);
                    h_[i * m + j] = h;
                    h_[j * m + i] = h;
                }
            }
            counts_.assign(m, 0.0);
        }
    }

    // pair-kernel sum over the multiset of m_star redrawn exceedances
    double pair_sum(std::size_t m_star, RngStream& rng) {
        if (!h_.empty()) {
            std::fill(counts_.begin(), counts_.end(), 0.0);
            for (std::size_t d = 0; d < m_star; ++d) {
                auto idx = static_cast<std::size_t>(rng.uniform() * static_cast<double>(m_));
                if (idx >= m_) idx = m_ - 1;
                counts_[idx] += 1.0;
            }
            const auto& k = kernels::active_table();
            double quad = 0.0;
            for (std::size_t i = 0; i < m_; ++i) {
                if (counts_[i] == 0.0) continue;
                quad += counts_[i] * k.dot(h_.data() + i * m_, counts_.data(), m_);
            }
            return 0.5 * quad;  // H has zero diagonal; equal-value self pairs contribute 0
        }
        // large m: expand the multiset (ascending index order keeps it sorted)
        expand_counts_.assign(m_, 0);
        for (std::size_t d = 0; d < m_star; ++d) {
            auto idx = static_cast<std::size_t>(rng.uniform() * static_cast<double>(m_));
            if (idx >= m_) idx = m_ - 1;
            ++expand_counts_[idx];
        }
        values_.clear();
        values_.reserve(m_star);
        for (std::size_t i = 0; i < m_; ++i)
            values_.insert(values_.end(), expand_counts_[i], ex_[i]);
        const auto& k = kernels::active_table();
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < values_.size(); ++i)
            total += k.pair_ratio_row(values_[i], values_.data() + i + 1, values_.size() - i - 1)
                         .sum;
        return total;
    }

private:
    const double* ex_;
    std::size_t m_;
    std::vector<double> h_;
    std::vector<double> counts_;
    std::vector<std::uint32_t> expand_counts_;
    std::vector<double> values_;
};

}  // namespace

BootstrapStats bootstrap_variance(const SortedSample& sample, double u, std::size_t reps,
                                  std::uint64_t seed) {
    if (reps < 1) throw std::invalid_argument("bootstrap: reps must be >= 1");
    const std::size_t n = sample.size();
    const std::size_t m = exceedance_count(sample, u);
    if (m < 2) throw insufficient_exceedances(m, 2);
    const double p = static_cast<double>(m) / static_cast<double>(n);

    BootstrapReplicator repl(sample.data() + (n - m), m);
    std::vector<double> t_star;
    t_star.reserve(reps);
    std::size_t dropped = 0;
    for (std::size_t b = 0; b < reps; ++b) {
        RngStream rng(seed, b);
        const std::uint64_t m_star = binomial_draw(n, p, rng);
        if (m_star < 2) {
            ++dropped;
            continue;
        }
        const double pairs = 0.5 * static_cast<double>(m_star) *
                             (static_cast<double>(m_star) - 1.0);
        t_star.push_back(repl.pair_sum(m_star, rng) / pairs);
    }
    if (dropped * 2 > reps || t_star.size() < 2) throw unstable_bootstrap(dropped, reps);

    double mean = 0.0;
    for (double t : t_star) mean += t;
    mean /= static_cast<double>(t_star.size());
    double ss = 0.0;
    for (double t : t_star) ss += (t - mean) * (t - mean);
    const double var_direct = ss / (static_cast<double>(t_star.size()) - 1.0);

    BootstrapStats out;
    out.sigma_sq_direct = var_direct;
    const double md = static_cast<double>(m);
    out.sigma_sq = static_cast<double>(n) *
                   (md * (md - 1.0) / (static_cast<double>(n) * (static_cast<double>(n) - 1.0))) *
                   var_direct;
    out.dropped = dropped;
    out.reps = reps;
    return out;
}

double sigma_hat_bootstrap(const SortedSample& sample, double u, std::size_t reps,
                           std::uint64_t seed) {
    return bootstrap_variance(sample, u, reps, seed).sigma_sq;
}

ConfidenceInterval confidence_interval(const SortedSample& sample, double u, double level,
                                       const VarianceMethod& method) {
    if (!(level > 0.0 && level < 1.0))
        throw std::domain_error("confidence_interval: level must lie in (0,1)");
    const auto est = estimate_at(sample, u);

    double s2 = 0.0;
    switch (method.kind) {
        case VarianceKind::unbiased: s2 = sigma_hat_plugin(sample, u); break;
        case VarianceKind::jackknife: s2 = sigma_hat_jackknife(sample, u); break;
        case VarianceKind::bootstrap:
            s2 = sigma_hat_bootstrap(sample, u, static_cast<std::size_t>(method.bootstrap_reps),
                                     method.seed);
            break;
    }
    s2 = std::max(s2, 0.0);

    const double z = normal_quantile(0.5 + 0.5 * level);
    const double denom =
        std::sqrt(static_cast<double>(sample.size()) * est.stats.u2);
    const double hw = z * std::sqrt(s2) / denom;

    ConfidenceInterval ci;
    ci.level = level;
    ci.t_hat = est.estimate.t_hat;
    ci.u = u;
    ci.m = est.stats.m;
    ci.method = method;
    ci.sigma_hat = std::sqrt(s2);
    ci.lo = std::max(ci.t_hat - hw, 0.0);
    ci.hi = std::min(ci.t_hat + hw, 1.0);
    return ci;
}

}  // namespace ptail
