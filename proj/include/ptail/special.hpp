#pragma once

namespace ptail {

// Digamma function for x > 0. Upward recurrence to x >= 6, then the
// asymptotic series with 8 Bernoulli terms. Relative accuracy ~1e-13 or
// better over [1e-6, 1e6] (absolute where |psi| <= 1).
double digamma(double x);

// psi(x + 1/2) - psi(x) evaluated without cancellation; full relative
// accuracy even for large x, where the plain difference would lose digits.
double digamma_half_diff(double x);

// Standard normal CDF and its inverse. The quantile uses a bracketed Newton
// iteration on erfc and is accurate to ~1e-14.
double normal_cdf(double z);
double normal_quantile(double p);

// Regularized incomplete gamma functions P(a,x), Q(a,x) = 1 - P(a,x), plus
// log Q(a,x) for deep tails where Q underflows.
double gamma_p(double a, double x);
double gamma_q(double a, double x);
double log_gamma_q(double a, double x);

}  // namespace ptail
