#include "ptail/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "ptail/error.hpp"
#include "ptail/special.hpp"

namespace ptail {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw std::domain_error(std::string(what) + " must be a positive finite number");
}

// Solve F(x) = p for families without an analytic quantile: bracket expansion
// from the left endpoint, then bisection on the survival function.
double numeric_quantile(const Distribution& d, double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("quantile: p outside (0,1)");
    const double target = 1.0 - p;  // survival at the quantile
    double lo = d.left_endpoint();
    double width = std::max(1.0, std::fabs(lo));
    double hi = lo + width;
    while (d.survival(hi) > target) {
        width *= 2.0;
        hi = lo + width;
        if (!std::isfinite(hi)) throw std::domain_error("quantile: bracket expansion failed");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (d.survival(mid) > target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

class Pareto1 final : public Distribution {
public:
    Pareto1(double x_m, double alpha) : xm_(x_m), alpha_(alpha) {
        require_positive(x_m, "x_m");
        require_positive(alpha, "alpha");
    }

    double density(double x) const override {
        if (x < xm_) return 0.0;
        return alpha_ * std::pow(xm_ / x, alpha_) / x;
    }
    double survival(double x) const override {
        if (x <= xm_) return 1.0;
        return std::pow(xm_ / x, alpha_);
    }
    double quantile(double p) const override {
        if (!(p > 0.0 && p < 1.0)) throw std::domain_error("quantile: p outside (0,1)");
        return xm_ * std::pow(1.0 - p, -1.0 / alpha_);
    }
    double left_endpoint() const override { return xm_; }
    std::string name() const override {
        return "pareto1(x_m=" + std::to_string(xm_) + ",alpha=" + std::to_string(alpha_) + ")";
    }
    double log_density_at_log(double lx) const override {
        if (lx < std::log(xm_)) return -std::numeric_limits<double>::infinity();
        return std::log(alpha_) + alpha_ * std::log(xm_) - (alpha_ + 1.0) * lx;
    }
    double log_survival(double x) const override {
        if (x <= xm_) return 0.0;
        return alpha_ * (std::log(xm_) - std::log(x));
    }
    double sample(RngStream& rng) const override {
        return xm_ * std::pow(rng.uniform(), -1.0 / alpha_);
    }
    std::optional<double> pareto_shape() const override { return alpha_; }

private:
    double xm_, alpha_;
};

// Pareto type II on (1, inf): f(x) = alpha / (theta (1+(x-1)/theta)^(alpha+1))
class Pareto2 final : public Distribution {
public:
    Pareto2(double theta, double alpha) : theta_(theta), alpha_(alpha) {
        require_positive(theta, "theta");
        require_positive(alpha, "alpha");
    }

    double density(double x) const override {
        if (x < 1.0) return 0.0;
        return alpha_ / (theta_ * std::pow(1.0 + (x - 1.0) / theta_, alpha_ + 1.0));
    }
    double survival(double x) const override {
        if (x <= 1.0) return 1.0;
        return std::pow(1.0 + (x - 1.0) / theta_, -alpha_);
    }
    double quantile(double p) const override {
        if (!(p > 0.0 && p < 1.0)) throw std::domain_error("quantile: p outside (0,1)");
        return 1.0 + theta_ * (std::pow(1.0 - p, -1.0 / alpha_) - 1.0);
    }
    double left_endpoint() const override { return 1.0; }
    std::string name() const override {
        return "pareto2(theta=" + std::to_string(theta_) + ",alpha=" + std::to_string(alpha_) +
               ")";
    }
    double log_density_at_log(double lx) const override {
        if (lx < 0.0) return -std::numeric_limits<double>::infinity();
        const double x = std::exp(lx);
        if (std::isinf(x)) {
            // (x-1)/theta ~ e^lx/theta, so log f ~ log(alpha/theta) - (a+1) log(e^lx/theta)
            return std::log(alpha_ / theta_) - (alpha_ + 1.0) * (lx - std::log(theta_));
        }
        return std::log(alpha_ / theta_) - (alpha_ + 1.0) * std::log1p((x - 1.0) / theta_);
    }
    double sample(RngStream& rng) const override {
        return 1.0 + theta_ * (std::pow(rng.uniform(), -1.0 / alpha_) - 1.0);
    }

private:
    double theta_, alpha_;
};

// Pareto type III on (1, inf): F-bar = 1 / (1 + ((x-1)/theta)^alpha)
class Pareto3 final : public Distribution {
public:
    Pareto3(double theta, double alpha) : theta_(theta), alpha_(alpha) {
        require_positive(theta, "theta");
        require_positive(alpha, "alpha");
    }

    double density(double x) const override {
        if (x <= 1.0) return 0.0;
        const double s = (x - 1.0) / theta_;
        const double sa = std::pow(s, alpha_);
        const double denom = 1.0 + sa;
        return alpha_ * std::pow(s, alpha_ - 1.0) / (theta_ * denom * denom);
    }
    double survival(double x) const override {
        if (x <= 1.0) return 1.0;
        return 1.0 / (1.0 + std::pow((x - 1.0) / theta_, alpha_));
    }
    double quantile(double p) const override {
        if (!(p > 0.0 && p < 1.0)) throw std::domain_error("quantile: p outside (0,1)");
        return 1.0 + theta_ * std::pow(p / (1.0 - p), 1.0 / alpha_);
    }
    double left_endpoint() const override { return 1.0; }
    std::string name() const override {
        return "pareto3(theta=" + std::to_string(theta_) + ",alpha=" + std::to_string(alpha_) +
               ")";
    }
    double log_density_at_log(double lx) const override {
        if (lx <= 0.0) return -std::numeric_limits<double>::infinity();
        const double x = std::exp(lx);
        if (std::isinf(x)) {
            const double ls = lx - std::log(theta_);
            return std::log(alpha_ / theta_) + (alpha_ - 1.0) * ls - 2.0 * alpha_ * ls;
        }
        const double d = density(x);
        return d > 0.0 ? std::log(d) : -std::numeric_limits<double>::infinity();
    }
    double sample(RngStream& rng) const override {
        const double u = rng.uniform();
        return 1.0 + theta_ * std::pow((1.0 - u) / u, 1.0 / alpha_);
    }

private:
    double theta_, alpha_;
};

class Gpd final : public Distribution {
public:
    Gpd(double beta, double xi) : beta_(beta), xi_(xi) {
        require_positive(beta, "beta");
        require_positive(xi, "xi");
    }

    double density(double x) const override {
        if (x < 0.0) return 0.0;
        return std::pow(1.0 + xi_ * x / beta_, -1.0 / xi_ - 1.0) / beta_;
    }
    double survival(double x) const override {
        if (x <= 0.0) return 1.0;
        return std::pow(1.0 + xi_ * x / beta_, -1.0 / xi_);
    }
    double quantile(double p) const override {
        if (!(p > 0.0 && p < 1.0)) throw std::domain_error("quantile: p outside (0,1)");
        return beta_ / xi_ * (std::pow(1.0 - p, -xi_) - 1.0);
    }
    double left_endpoint() const override { return 0.0; }
    std::string name() const override {
        return "gpd(beta=" + std::to_string(beta_) + ",xi=" + std::to_string(xi_) + ")";
    }
    double log_density_at_log(double lx) const override {
        const double x = std::exp(lx);
        if (std::isinf(x)) {
            return -std::log(beta_) - (1.0 / xi_ + 1.0) * (std::log(xi_ / beta_) + lx);
        }
        return -std::log(beta_) - (1.0 / xi_ + 1.0) * std::log1p(xi_ * x / beta_);
    }
    double sample(RngStream& rng) const override {
        return beta_ / xi_ * (std::pow(rng.uniform(), -xi_) - 1.0);
    }

private:
    double beta_, xi_;
};

// Log-gamma on [1, inf): f(x) = alpha^beta/Gamma(beta) (log x)^(beta-1) x^-(alpha+1);
// equivalently exp(G) with G ~ Gamma(shape beta, rate alpha).
class LogGamma final : public Distribution {
public:
    LogGamma(double alpha, double beta) : alpha_(alpha), beta_(beta) {
        require_positive(alpha, "alpha");
        require_positive(beta, "beta");
        log_norm_ = beta_ * std::log(alpha_) - std::lgamma(beta_);
    }

    double density(double x) const override {
        if (x < 1.0) return 0.0;
        if (x == 1.0) return beta_ > 1.0 ? 0.0 : (beta_ == 1.0 ? alpha_ : 0.0);
        return std::exp(log_density_at_log(std::log(x)));
    }
    double survival(double x) const override {
        if (x <= 1.0) return 1.0;
        return gamma_q(beta_, alpha_ * std::log(x));
    }
    double quantile(double p) const override { return numeric_quantile(*this, p); }
    double left_endpoint() const override { return 1.0; }
    std::string name() const override {
        return "loggamma(alpha=" + std::to_string(alpha_) + ",beta=" + std::to_string(beta_) +
               ")";
    }
    double log_density_at_log(double lx) const override {
        if (lx <= 0.0) return -std::numeric_limits<double>::infinity();
        return log_norm_ + (beta_ - 1.0) * std::log(lx) - (alpha_ + 1.0) * lx;
    }
    double log_survival(double x) const override {
        if (x <= 1.0) return 0.0;
        return log_gamma_q(beta_, alpha_ * std::log(x));
    }
    double sample(RngStream& rng) const override {
        return std::exp(gamma_draw(beta_, rng) / alpha_);
    }

private:
    double alpha_, beta_, log_norm_;
};

class WeibullDist final : public Distribution {
public:
    WeibullDist(double k, double scale) : k_(k), scale_(scale) {
        require_positive(k, "k");
        require_positive(scale, "scale");
    }

    double density(double x) const override {
        if (x < 0.0) return 0.0;
        if (x == 0.0) return k_ == 1.0 ? 1.0 / scale_ : (k_ > 1.0 ? 0.0 : std::numeric_limits<double>::infinity());
        const double s = x / scale_;
        return k_ / scale_ * std::pow(s, k_ - 1.0) * std::exp(-std::pow(s, k_));
    }
    double survival(double x) const override {
        if (x <= 0.0) return 1.0;
        return std::exp(-std::pow(x / scale_, k_));
    }
    double quantile(double p) const override {
        if (!(p > 0.0 && p < 1.0)) throw std::domain_error("quantile: p outside (0,1)");
        return scale_ * std::pow(-std::log1p(-p), 1.0 / k_);
    }
    double left_endpoint() const override { return 0.0; }
    std::string name() const override {
        return "weibull(k=" + std::to_string(k_) + ",scale=" + std::to_string(scale_) + ")";
    }
    double log_density_at_log(double lx) const override {
        const double ls = lx - std::log(scale_);
        const double sk = std::exp(k_ * ls);
        return std::log(k_ / scale_) + (k_ - 1.0) * ls - sk;
    }
    double log_survival(double x) const override {
        if (x <= 0.0) return 0.0;
        return -std::pow(x / scale_, k_);
    }
    double sample(RngStream& rng) const override {
        return scale_ * std::pow(-std::log(rng.uniform()), 1.0 / k_);
    }

private:
    double k_, scale_;
};

// exp(C) with C standard Cauchy; optionally conditioned on X >= 1.
class LogCauchy final : public Distribution {
public:
    explicit LogCauchy(bool truncated) : truncated_(truncated) {}

    double density(double x) const override {
        if (x < left_endpoint() || x <= 0.0) return 0.0;
        const double lx = std::log(x);
        const double base = 1.0 / (kPi * x * (1.0 + lx * lx));
        return truncated_ ? 2.0 * base : base;
    }
    double survival(double x) const override {
        if (x <= left_endpoint()) return 1.0;
        const double lx = std::log(x);
        const double s = 0.5 - std::atan(lx) / kPi;
        return truncated_ ? 2.0 * s : s;
    }
    double quantile(double p) const override {
        if (!(p > 0.0 && p < 1.0)) throw std::domain_error("quantile: p outside (0,1)");
        const double q = truncated_ ? p * 0.5 + 0.5 : p;
        return std::exp(std::tan(kPi * (q - 0.5)));
    }
    double left_endpoint() const override { return truncated_ ? 1.0 : 0.0; }
    std::string name() const override {
        return truncated_ ? std::string("logcauchy1") : std::string("logcauchy");
    }
    double log_density_at_log(double lx) const override {
        if (truncated_ && lx < 0.0) return -std::numeric_limits<double>::infinity();
        const double r = (truncated_ ? std::log(2.0 / kPi) : -std::log(kPi));
        return r - lx - std::log1p(lx * lx);
    }
    double log_survival(double x) const override {
        if (x <= left_endpoint()) return 0.0;
        const double lx = std::log(x);
        if (lx > 1e8) {
            // atan(t) = pi/2 - 1/t + O(t^-3)
            const double s = 1.0 / (kPi * lx);
            return std::log(truncated_ ? 2.0 * s : s);
        }
        return std::log(survival(x));
    }
    double sample(RngStream& rng) const override {
        const double u = truncated_ ? rng.uniform() * 0.5 + 0.5 : rng.uniform();
        const double v = std::exp(std::tan(kPi * (u - 0.5)));
        // saturate the (~5e-4 probability) overflow region at the largest finite double
        return std::isinf(v) ? std::numeric_limits<double>::max() : v;
    }

private:
    bool truncated_;
};

class ShiftedGamma final : public Distribution {
public:
    ShiftedGamma(double shape, double scale, double shift)
        : shape_(shape), scale_(scale), shift_(shift) {
        require_positive(shape, "shape");
        require_positive(scale, "scale");
        if (!std::isfinite(shift)) throw std::domain_error("shift must be finite");
    }

    double density(double x) const override {
        const double y = (x - shift_) / scale_;
        if (y < 0.0) return 0.0;
        if (y == 0.0)
            return shape_ == 1.0 ? 1.0 / scale_
                                 : (shape_ > 1.0 ? 0.0 : std::numeric_limits<double>::infinity());
        return std::exp((shape_ - 1.0) * std::log(y) - y - std::lgamma(shape_)) / scale_;
    }
    double survival(double x) const override {
        const double y = (x - shift_) / scale_;
        if (y <= 0.0) return 1.0;
        return gamma_q(shape_, y);
    }
    double quantile(double p) const override { return numeric_quantile(*this, p); }
    double left_endpoint() const override { return shift_; }
    std::string name() const override {
        return "shiftedgamma(shape=" + std::to_string(shape_) + ",scale=" + std::to_string(scale_) +
               ",shift=" + std::to_string(shift_) + ")";
    }
    double log_density_at_log(double lx) const override {
        const double x = std::exp(lx);
        const double y = (x - shift_) / scale_;
        if (!(y > 0.0)) return -std::numeric_limits<double>::infinity();
        return (shape_ - 1.0) * std::log(y) - y - std::lgamma(shape_) - std::log(scale_);
    }
    double log_survival(double x) const override {
        const double y = (x - shift_) / scale_;
        if (y <= 0.0) return 0.0;
        return log_gamma_q(shape_, y);
    }
    double sample(RngStream& rng) const override {
        return shift_ + scale_ * gamma_draw(shape_, rng);
    }

private:
    double shape_, scale_, shift_;
};

}  // namespace

double Distribution::log_density_at_log(double log_x) const {
    const double d = density(std::exp(log_x));
    return d > 0.0 ? std::log(d) : -std::numeric_limits<double>::infinity();
}

double Distribution::log_survival(double x) const {
    const double s = survival(x);
    return s > 0.0 ? std::log(s) : -std::numeric_limits<double>::infinity();
}

double Distribution::sample(RngStream& rng) const { return quantile(rng.uniform()); }

double gamma_draw(double shape, RngStream& rng) {
    if (!(shape > 0.0)) throw std::domain_error("gamma_draw: shape must be positive");
    if (shape < 1.0) {
        // boost: G(a) = G(a+1) * U^(1/a)
        const double g = gamma_draw(shape + 1.0, rng);
        return g * std::pow(rng.uniform(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    while (true) {
        double x, v;
        do {
            x = rng.normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.uniform();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

DistributionPtr make_pareto1(double x_m, double alpha) {
    return std::make_shared<Pareto1>(x_m, alpha);
}
DistributionPtr make_pareto2(double theta, double alpha) {
    return std::make_shared<Pareto2>(theta, alpha);
}
DistributionPtr make_pareto3(double theta, double alpha) {
    return std::make_shared<Pareto3>(theta, alpha);
}
DistributionPtr make_gpd(double beta, double xi) { return std::make_shared<Gpd>(beta, xi); }
DistributionPtr make_log_gamma(double alpha, double beta) {
    return std::make_shared<LogGamma>(alpha, beta);
}
DistributionPtr make_weibull(double k, double scale) {
    return std::make_shared<WeibullDist>(k, scale);
}
DistributionPtr make_log_cauchy(bool truncated_at_one) {
    return std::make_shared<LogCauchy>(truncated_at_one);
}
DistributionPtr make_shifted_gamma(double shape, double scale, double shift) {
    return std::make_shared<ShiftedGamma>(shape, scale, shift);
}

DistributionPtr make_distribution(const std::string& family,
                                  const std::map<std::string, double>& params) {
    const auto take = [&params](std::initializer_list<const char*> names,
                                const std::string& family_name) {
        std::vector<double> vals;
        std::vector<std::string> missing;
        for (const char* n : names) {
            auto it = params.find(n);
            if (it == params.end())
                missing.push_back(n);
            else
                vals.push_back(it->second);
        }
        std::vector<std::string> extra;
        for (const auto& [k, v] : params) {
            (void)v;
            bool known = false;
            for (const char* n : names) known = known || (k == n);
            if (!known) extra.push_back(k);
        }
        if (!missing.empty() || !extra.empty()) {
            std::string msg = "distribution '" + family_name + "':";
            if (!missing.empty()) {
                msg += " missing keys:";
                for (auto& m : missing) msg += " " + m;
            }
            if (!extra.empty()) {
                msg += " unknown keys:";
                for (auto& e : extra) msg += " " + e;
            }
            std::vector<std::string> all = missing;
            all.insert(all.end(), extra.begin(), extra.end());
            throw config_error(msg, all);
        }
        return vals;
    };

    if (family == "pareto1") {
        auto v = take({"x_m", "alpha"}, family);
        return make_pareto1(v[0], v[1]);
    }
    if (family == "pareto2") {
        auto v = take({"theta", "alpha"}, family);
        return make_pareto2(v[0], v[1]);
    }
    if (family == "pareto3") {
        auto v = take({"theta", "alpha"}, family);
        return make_pareto3(v[0], v[1]);
    }
    if (family == "gpd") {
        auto v = take({"beta", "xi"}, family);
        return make_gpd(v[0], v[1]);
    }
    if (family == "loggamma") {
        auto v = take({"alpha", "beta"}, family);
        return make_log_gamma(v[0], v[1]);
    }
    if (family == "weibull") {
        auto v = take({"k", "scale"}, family);
        return make_weibull(v[0], v[1]);
    }
    if (family == "logcauchy") {
        take({}, family);
        return make_log_cauchy(false);
    }
    if (family == "logcauchy1") {
        take({}, family);
        return make_log_cauchy(true);
    }
    if (family == "shiftedgamma") {
        auto v = take({"shape", "scale", "shift"}, family);
        return make_shifted_gamma(v[0], v[1], v[2]);
    }
    throw config_error("unknown distribution family '" + family + "'", {family});
}

double min_survival(const Distribution& dist, double u) {
    const double s = dist.survival(u);
    return s * s;
}

SortedSample sample_sorted(const Distribution& dist, std::size_t n, RngStream& rng) {
    if (n < 2) throw std::invalid_argument("sample_sorted: need n >= 2");
    std::vector<double> xs(n);
    for (auto& x : xs) x = dist.sample(rng);
    return SortedSample(std::move(xs));
}

}  // namespace ptail
