#pragma once

#include <memory>

#include "ptail/special.hpp"

namespace ptail {

class Distribution;

// Tail value of a Pareto distribution with shape alpha: the constant value of
// E[|X1-X2|/(X1+X2) | min >= u]. Closed form; shapes within 1e-9 of a positive
// integer use the alternating-sum recursion branch, all others the digamma
// branch. Strictly decreasing in alpha, range (0,1).
double pareto_tail_value(double alpha);

// Same quantity by adaptive quadrature of 2*int_0^1 y^a/(1+y)^2 dy
// (numerically, after the substitution y = exp(-v)); digamma-free route used
// as the independent check of the closed form. Absolute tolerance 1e-12.
double pareto_tail_value_quadrature(double alpha);

// Unique alpha with pareto_tail_value(alpha) == t, by bisection on log(alpha)
// over [1e-8, 1e8]; throws bracket_error when t is outside the achievable
// range of the bracket.
double invert_tail_value(double t);

// Limit density of Z = (X(2)-X(1))/(X(1)+X(2)) given the minimum, for Pareto:
// 2a (1+z)^-(a+1) (1-z)^(a-1) on (0,1).
double pareto_limit_density(double alpha, double z);

// Conditional density g(z|u) of Z given the minimum equals u, for an
// arbitrary absolutely continuous family.
double huge_jump_density(const Distribution& dist, double u, double z);

// int_0^1 g(z|u) dz and int_0^1 z g(z|u) dz, evaluated in the substituted
// variable w = -log(1-z) so the integrable endpoint singularity at z -> 1 and
// the far tail are both resolved.
double huge_jump_mass(const Distribution& dist, double u, double tol = 1e-10);
double huge_jump_mean(const Distribution& dist, double u, double tol = 1e-10);

// t(u) = E[Z | min >= u] via the nested integral over the minimum's density,
// normalized by survival(u)^2. Numeric oracle, absolute tolerance ~1e-6.
double theoretical_tail_value(const Distribution& dist, double u);

}  // namespace ptail
