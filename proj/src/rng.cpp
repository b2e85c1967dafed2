#include "ptail/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace ptail {

double RngStream::normal() noexcept {
    if (has_cached_) {
        has_cached_ = false;
        return cached_normal_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    cached_normal_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
}

std::uint64_t binomial_draw(std::uint64_t n, double p, RngStream& rng) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("binomial_draw: p outside [0,1]");
    if (n == 0 || p == 0.0) return 0;
    if (p == 1.0) return n;

    const double u = rng.uniform();
    const double nd = static_cast<double>(n);

    // log pmf at the mode, then walk the CDF outward in both directions.
    const auto log_pmf = [&](double k) {
        return std::lgamma(nd + 1.0) - std::lgamma(k + 1.0) - std::lgamma(nd - k + 1.0) +
               k * std::log(p) + (nd - k) * std::log1p(-p);
    };

    const std::uint64_t mode = static_cast<std::uint64_t>((nd + 1.0) * p);
    const double pm = std::exp(log_pmf(static_cast<double>(mode > n ? n : mode)));

    // pmf recurrences: f(k+1) = f(k) * (n-k)/(k+1) * p/(1-p)
    const double ratio = p / (1.0 - p);
    double cum = pm;
    if (u <= cum) return mode;

    double f_up = pm, f_dn = pm;
    std::uint64_t k_up = mode, k_dn = mode;
    while (true) {
        bool advanced = false;
        if (k_up < n) {
            f_up *= (nd - static_cast<double>(k_up)) / (static_cast<double>(k_up) + 1.0) * ratio;
            ++k_up;
            cum += f_up;
            advanced = true;
            if (u <= cum) return k_up;
        }
        if (k_dn > 0) {
            f_dn *= static_cast<double>(k_dn) / ((nd - static_cast<double>(k_dn) + 1.0) * ratio);
            --k_dn;
            cum += f_dn;
            advanced = true;
            if (u <= cum) return k_dn;
        }
        if (!advanced) return k_up;  // u in the rounding slack beyond both tails
    }
}

}  // namespace ptail
