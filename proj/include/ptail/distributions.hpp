#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "ptail/rng.hpp"
#include "ptail/sample.hpp"

namespace ptail {

// One heavy-tailed family with fixed parameters. Densities, survival
// functions and quantiles are mutually consistent; samplers are deterministic
// given an RngStream.
class Distribution {
public:
    virtual ~Distribution() = default;

    virtual double density(double x) const = 0;
    virtual double survival(double x) const = 0;
    virtual double quantile(double p) const = 0;
    virtual double left_endpoint() const = 0;
    virtual std::string name() const = 0;

    // log f(e^y): overridden where the density is naturally a function of
    // log x, which keeps the far tail evaluable past the overflow range of x.
    virtual double log_density_at_log(double log_x) const;

    virtual double log_survival(double x) const;

    // one draw; default is inverse transform through quantile()
    virtual double sample(RngStream& rng) const;

    // Pareto type I reports its shape so simulation code can use the exact
    // tail value instead of the numeric one.
    virtual std::optional<double> pareto_shape() const { return std::nullopt; }
};

using DistributionPtr = std::shared_ptr<const Distribution>;

DistributionPtr make_pareto1(double x_m, double alpha);
DistributionPtr make_pareto2(double theta, double alpha);  // shifted to (1, inf)
DistributionPtr make_pareto3(double theta, double alpha);  // shifted to (1, inf)
DistributionPtr make_gpd(double beta, double xi);
DistributionPtr make_log_gamma(double alpha, double beta);
DistributionPtr make_weibull(double k, double scale);
DistributionPtr make_log_cauchy(bool truncated_at_one = false);
DistributionPtr make_shifted_gamma(double shape, double scale, double shift);

// Factory from the CLI grammar: family name plus key=value parameters.
// Unknown families or missing/extra keys raise config_error listing the keys.
DistributionPtr make_distribution(const std::string& family,
                                  const std::map<std::string, double>& params);

// nu_u = P(min{X1,X2} > u) = survival(u)^2
double min_survival(const Distribution& dist, double u);

// n iid draws, returned sorted.
SortedSample sample_sorted(const Distribution& dist, std::size_t n, RngStream& rng);

// Gamma(shape, scale=1) draw by Marsaglia-Tsang; used by the gamma-based
// families and exposed for tests.
double gamma_draw(double shape, RngStream& rng);

}  // namespace ptail
