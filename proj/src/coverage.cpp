#include "ptail/coverage.hpp"

#include <cmath>
#include <stdexcept>

#include "ptail/error.hpp"
#include "ptail/parallel.hpp"
#include "ptail/tail_math.hpp"

namespace ptail {

std::size_t required_n(const Distribution& dist, double u, double n_eff) {
    if (!(n_eff > 0.0)) throw std::domain_error("required_n: n_eff must be positive");
    const double nu = min_survival(dist, u);
    if (!(nu > 0.0)) throw std::domain_error("required_n: degenerate threshold, survival(u) = 0");
    const double n = std::round(n_eff / nu);
    return n < 4.0 ? 4 : static_cast<std::size_t>(n);
}

namespace {

enum class Outcome : unsigned char { miss = 0, cover = 1, dropped = 2 };

}  // namespace

CoverageReport run_coverage(const CoverageConfig& config) {
    if (!config.dist) throw std::invalid_argument("run_coverage: no distribution");
    if (config.reps < 100) throw std::invalid_argument("run_coverage: reps must be >= 100");
    if (!(config.level > 0.0 && config.level < 1.0))
        throw std::domain_error("run_coverage: level outside (0,1)");
    if (config.methods.empty()) throw std::invalid_argument("run_coverage: no methods");

    const Distribution& dist = *config.dist;
    const std::size_t n = required_n(dist, config.u, config.n_eff);

    double t_true;
    if (config.true_value) {
        t_true = *config.true_value;
    } else if (auto shape = dist.pareto_shape()) {
        t_true = pareto_tail_value(*shape);
    } else {
        t_true = theoretical_tail_value(dist, config.u);
    }

    const std::size_t n_methods = config.methods.size();
    std::vector<Outcome> outcomes(config.reps * n_methods, Outcome::dropped);
    std::vector<double> widths(config.reps * n_methods, 0.0);

    parallel_for_blocks(config.reps, config.threads, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t r = lo; r < hi; ++r) {
            RngStream rng(config.seed, 2 * r);
            SortedSample sample = sample_sorted(dist, n, rng);
            for (std::size_t mi = 0; mi < n_methods; ++mi) {
                VarianceMethod method;
                method.kind = config.methods[mi];
                method.bootstrap_reps = config.bootstrap_reps;
                method.seed = RngStream(config.seed, 2 * r + 1).seed_key();
                try {
                    const ConfidenceInterval ci =
                        confidence_interval(sample, config.u, config.level, method);
                    const bool inside = ci.lo <= t_true && t_true <= ci.hi;
                    outcomes[r * n_methods + mi] = inside ? Outcome::cover : Outcome::miss;
                    widths[r * n_methods + mi] = ci.hi - ci.lo;
                } catch (const insufficient_exceedances&) {
                } catch (const insufficient_sample&) {
                } catch (const unstable_bootstrap&) {
                }
            }
        }
    });

    CoverageReport report;
    report.dist_name = dist.name();
    report.u = config.u;
    report.n_eff = config.n_eff;
    report.n = n;
    report.level = config.level;
    report.reps = config.reps;
    report.seed = config.seed;
    report.bootstrap_reps = config.bootstrap_reps;
    report.true_value = t_true;

    for (std::size_t mi = 0; mi < n_methods; ++mi) {
        MethodCoverage mc;
        mc.kind = config.methods[mi];
        std::size_t covered = 0;
        double width_sum = 0.0;
        for (std::size_t r = 0; r < config.reps; ++r) {
            switch (outcomes[r * n_methods + mi]) {
                case Outcome::cover:
                    ++covered;
                    ++mc.evaluated;
                    width_sum += widths[r * n_methods + mi];
                    break;
                case Outcome::miss:
                    ++mc.evaluated;
                    width_sum += widths[r * n_methods + mi];
                    break;
                case Outcome::dropped: ++mc.dropped; break;
            }
        }
        if (mc.evaluated > 0) {
            const double p = static_cast<double>(covered) / static_cast<double>(mc.evaluated);
            mc.coverage_pct = 100.0 * p;
            mc.mc_se_pct = 100.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(mc.evaluated));
            mc.mean_ci_width = width_sum / static_cast<double>(mc.evaluated);
        }
        if (mc.dropped * 10 > config.reps) report.high_drop_rate = true;
        report.methods.push_back(mc);
    }
    return report;
}

std::vector<std::string> figure2_presets() { return {"pareto", "loggamma", "shiftedgamma"}; }

Figure2Result figure2_curves(const std::string& preset, std::size_t n, std::uint64_t seed) {
    std::vector<std::pair<std::string, DistributionPtr>> dists;
    if (preset == "pareto") {
        dists = {{"pareto1 shape 0.5", make_pareto1(1.0, 0.5)},
                 {"pareto2 shape 1.5", make_pareto2(5.0, 1.5)},
                 {"pareto3 shape 3", make_pareto3(5.0, 3.0)}};
    } else if (preset == "loggamma") {
        dists = {{"loggamma shape 0.5", make_log_gamma(0.5, 2.0)},
                 {"loggamma shape 1.5", make_log_gamma(1.5, 2.0)},
                 {"loggamma shape 3", make_log_gamma(3.0, 2.0)}};
    } else if (preset == "shiftedgamma") {
        // mean 10 on (1, inf): shift 1, shape * scale = 9
        dists = {{"shiftedgamma shape 0.5", make_shifted_gamma(0.5, 18.0, 1.0)},
                 {"shiftedgamma shape 2", make_shifted_gamma(2.0, 4.5, 1.0)},
                 {"shiftedgamma shape 8", make_shifted_gamma(8.0, 1.125, 1.0)}};
    } else {
        throw std::invalid_argument("figure2_curves: unknown preset '" + preset +
                                    "' (expected pareto|loggamma|shiftedgamma)");
    }

    Figure2Result out;
    out.preset = preset;
    out.ref_t1 = pareto_tail_value(1.0);
    out.ref_t2 = pareto_tail_value(2.0);
    for (std::size_t d = 0; d < dists.size(); ++d) {
        RngStream rng(seed, d);
        SortedSample sample = sample_sorted(*dists[d].second, n, rng);
        const double cap = sample.quantile(0.995);
        Figure2Curve curve;
        curve.label = dists[d].first;
        for (auto& e : tail_curve(sample, sample.size() - 1)) {
            if (e.u <= cap) curve.points.push_back(e);
        }
        out.curves.push_back(std::move(curve));
    }
    return out;
}

}  // namespace ptail
