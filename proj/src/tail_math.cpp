#include "ptail/tail_math.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "ptail/distributions.hpp"
#include "ptail/error.hpp"
#include "ptail/quadrature.hpp"

namespace ptail {

namespace {

constexpr double kLog2 = 0.69314718055994530941723212145818;

void require_shape(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw std::domain_error("pareto tail value: alpha must be a positive finite number");
}

double integer_branch(long long a) {
    // 2a sum_{k=1}^{a-1} (-1)^(a+1-k)/k + (-1)^(a+1) 2a log 2 - 1
    double sum = 0.0;
    for (long long k = 1; k < a; ++k) {
        const double term = 1.0 / static_cast<double>(k);
        sum += ((a + 1 - k) % 2 == 0) ? term : -term;
    }
    const double sign_a = (a % 2 == 0) ? -1.0 : 1.0;  // (-1)^(a+1)
    const double ad = static_cast<double>(a);
    return 2.0 * ad * sum + sign_a * 2.0 * ad * kLog2 - 1.0;
}

// log x for x = u (2 e^w - 1), stable for all w >= 0
double log_arg(double log_u, double w) {
    if (w > 1.0) return log_u + w + kLog2 + std::log1p(-0.5 * std::exp(-w));
    return log_u + std::log(2.0 * std::exp(w) - 1.0);
}

// integral over z in (0,1) of weight(z) * g(z|u), computed in w = -log(1-z)
double huge_jump_integral(const Distribution& dist, double u,
                          const std::function<double(double)>& weight, double tol) {
    if (!(u > dist.left_endpoint()))
        throw std::domain_error("huge_jump_density: u must exceed the left endpoint");
    const double log_sv = dist.log_survival(u);
    if (!std::isfinite(log_sv))
        throw std::domain_error("huge_jump_density: degenerate conditioning, survival(u) = 0");
    const double log_u = std::log(u);
    const double pre = kLog2 + log_u - log_sv;

    const auto integrand = [&](double w) {
        const double ld = dist.log_density_at_log(log_arg(log_u, w));
        const double lg = pre + ld + w;
        if (lg < -745.0) return 0.0;
        return weight(w) * std::exp(lg);
    };
    QuadResult r = integrate_to_inf(integrand, 0.0, tol, tol, 1.0, 80);
    if (!r.converged)
        throw quadrature_error("huge_jump integral did not converge", r.value, r.err_estimate);
    return r.value;
}

}  // namespace

double pareto_tail_value(double alpha) {
    require_shape(alpha);
    const double rounded = std::round(alpha);
    if (rounded >= 1.0 && rounded <= 1e6 && std::fabs(alpha - rounded) < 1e-9)
        return integer_branch(static_cast<long long>(rounded));
    return alpha * digamma_half_diff(0.5 * alpha) - 1.0;
}

double pareto_tail_value_quadrature(double alpha) {
    require_shape(alpha);
    // 2 int_0^1 y^a/(1+y)^2 dy with y = exp(-v)
    const auto integrand = [alpha](double v) {
        const double e = std::exp(-v);
        const double denom = 1.0 + e;
        return std::exp(-(alpha + 1.0) * v) / (denom * denom);
    };
    QuadResult r = integrate_to_inf(integrand, 0.0, 5e-13, 5e-13, 1.0, 80);
    if (!r.converged)
        throw quadrature_error("tail value quadrature did not converge", r.value, r.err_estimate);
    return 2.0 * r.value;
}

double invert_tail_value(double t) {
    if (!(t > 0.0 && t < 1.0) || !std::isfinite(t))
        throw std::domain_error("invert_tail_value: t must lie in (0,1)");
    double lo = std::log(1e-8), hi = std::log(1e8);
    // strictly decreasing in alpha: value at lo end is the largest
    if (t >= pareto_tail_value(1e-8) || t <= pareto_tail_value(1e8))
        throw bracket_error("invert_tail_value: t outside the achievable range of [1e-8, 1e8]");
    for (int it = 0; it < 120 && hi - lo >= 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (pareto_tail_value(std::exp(mid)) > t)
            lo = mid;
        else
            hi = mid;
    }
    return std::exp(0.5 * (lo + hi));
}

double pareto_limit_density(double alpha, double z) {
    require_shape(alpha);
    if (!(z > 0.0 && z < 1.0)) {
        if (z == 0.0) return 2.0 * alpha;  // continuous limit at the closed endpoint
        throw std::domain_error("pareto_limit_density: z must lie in (0,1)");
    }
    return 2.0 * alpha * std::pow(1.0 + z, -(alpha + 1.0)) * std::pow(1.0 - z, alpha - 1.0);
}

double huge_jump_density(const Distribution& dist, double u, double z) {
    if (!(z > 0.0 && z < 1.0))
        throw std::domain_error("huge_jump_density: z must lie in (0,1)");
    if (!(u > dist.left_endpoint()))
        throw std::domain_error("huge_jump_density: u must exceed the left endpoint");
    const double sv = dist.survival(u);
    if (!(sv > 0.0))
        throw std::domain_error("huge_jump_density: degenerate conditioning, survival(u) = 0");
    const double om = 1.0 - z;
    return 2.0 * u * dist.density(u * (1.0 + z) / om) / (om * om * sv);
}

double huge_jump_mass(const Distribution& dist, double u, double tol) {
    return huge_jump_integral(dist, u, [](double) { return 1.0; }, tol);
}

double huge_jump_mean(const Distribution& dist, double u, double tol) {
    // z = 1 - exp(-w) = -expm1(-w)
    return huge_jump_integral(dist, u, [](double w) { return -std::expm1(-w); }, tol);
}

double theoretical_tail_value(const Distribution& dist, double u) {
    if (!(u > dist.left_endpoint()))
        throw std::domain_error("theoretical_tail_value: u must exceed the left endpoint");
    const double log_sv_u = dist.log_survival(u);
    if (!std::isfinite(log_sv_u))
        throw std::domain_error("theoretical_tail_value: survival(u) = 0");

    // conditional density of the minimum given min >= u, in logs:
    //   2 f(s) sv(s) / sv(u)^2
    const auto outer = [&](double s) {
        const double lf = dist.log_density_at_log(std::log(s));
        const double ls = dist.log_survival(s);
        const double lw = kLog2 + lf + ls - 2.0 * log_sv_u;
        if (lw < -745.0 || !std::isfinite(lw)) return 0.0;
        const double inner = huge_jump_mean(dist, s, 1e-9);
        return inner * std::exp(lw);
    };
    QuadResult r = integrate_to_inf(outer, u, 1e-8, 1e-7, std::max(0.5 * u, 1e-6), 80);
    if (!r.converged)
        throw quadrature_error("theoretical_tail_value did not converge", r.value,
                               r.err_estimate);
    return r.value;
}

}  // namespace ptail
