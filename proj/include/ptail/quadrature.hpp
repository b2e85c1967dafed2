#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace ptail {

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;
    std::size_t evals = 0;
    bool converged = false;
};

namespace detail {

// Gauss 7 / Kronrod 15 point pair on [-1,1]; rows are (node, gauss weight,
// kronrod weight), nodes used symmetrically.
inline constexpr double kG7K15[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529},
};

template <class F>
double gauss_kronrod_15(const F& f, double a, double b, double& err) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f0 = f(mid);
    double g7 = kG7K15[0][1] * f0;
    double k15 = kG7K15[0][2] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kG7K15[i][0];
        const double fi = f(mid + dx) + f(mid - dx);
        g7 += kG7K15[i][1] * fi;
        k15 += kG7K15[i][2] * fi;
    }
    g7 *= half;
    k15 *= half;
    err = std::fabs(k15 - g7);
    return k15;
}

}  // namespace detail

// Adaptive bisection with a per-interval error budget: a subinterval is
// accepted when the Kronrod-Gauss discrepancy is below its share of the
// tolerance, otherwise it is split and the budget halved.
template <class F>
QuadResult integrate(const F& f, double a, double b, double abs_tol = 1e-12,
                     double rel_tol = 1e-12, int max_depth = 60) {
    struct Segment {
        double a, b, tol;
        int depth;
    };
    // explicit stack; deepest-first so the segment count stays bounded
    std::vector<Segment> stack;
    stack.push_back({a, b, abs_tol, 0});

    QuadResult out;
    out.converged = true;
    double coarse = 0.0;
    {
        double e0;
        coarse = detail::gauss_kronrod_15(f, a, b, e0);
        out.evals += 15;
    }

    while (!stack.empty()) {
        const Segment seg = stack.back();
        stack.pop_back();
        double err;
        const double v = detail::gauss_kronrod_15(f, seg.a, seg.b, err);
        out.evals += 15;
        const double goal = std::max(seg.tol, rel_tol * std::fabs(coarse) *
                                                  (seg.b - seg.a) / (b - a));
        if (err <= goal || seg.depth >= max_depth) {
            if (err > goal) out.converged = false;
            out.value += v;
            out.err_estimate += err;
            continue;
        }
        const double mid = 0.5 * (seg.a + seg.b);
        stack.push_back({seg.a, mid, 0.5 * seg.tol, seg.depth + 1});
        stack.push_back({mid, seg.b, 0.5 * seg.tol, seg.depth + 1});
    }
    return out;
}

// Integral over [a, infinity) by geometrically widening segments; stops when
// two consecutive segments contribute less than the tolerance.
template <class F>
QuadResult integrate_to_inf(const F& f, double a, double abs_tol = 1e-12,
                            double rel_tol = 1e-12, double first_width = 1.0,
                            int max_segments = 80) {
    QuadResult out;
    out.converged = true;
    double lo = a;
    double width = first_width;
    int quiet = 0;
    for (int s = 0; s < max_segments; ++s) {
        const double hi = lo + width;
        QuadResult part = integrate(f, lo, hi, abs_tol * 0.5, rel_tol * 0.5);
        out.value += part.value;
        out.err_estimate += part.err_estimate;
        out.evals += part.evals;
        if (!part.converged) out.converged = false;
        const double gate = std::max(abs_tol, rel_tol * std::fabs(out.value)) * 0.01;
        quiet = (std::fabs(part.value) <= gate) ? quiet + 1 : 0;
        if (quiet >= 2) return out;
        lo = hi;
        width *= 2.0;
    }
    out.converged = false;
    return out;
}

}  // namespace ptail
