#include "ptail/io/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ptail/tail_math.hpp"

namespace ptail::io {

namespace {

constexpr double kWidth = 800.0, kHeight = 500.0;
constexpr double kLeft = 70.0, kRight = 730.0, kTop = 30.0, kBottom = 440.0;

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

struct Scale {
    double lo, hi;
    bool log;
    double map(double v, double out_lo, double out_hi) const {
        const double a = log ? std::log(lo) : lo;
        const double b = log ? std::log(hi) : hi;
        const double x = log ? std::log(v) : v;
        const double f = (b == a) ? 0.5 : (x - a) / (b - a);
        return out_lo + f * (out_hi - out_lo);
    }
};

void polyline(std::ostream& os, const std::vector<TailCurvePoint>& curve, const Scale& sx,
              const Scale& sy, double (*pick)(const TailCurvePoint&), const char* style) {
    os << "  <polyline fill=\"none\" " << style << " points=\"";
    bool first = true;
    for (const auto& p : curve) {
        if (!first) os << ' ';
        first = false;
        os << px(sx.map(p.u, kLeft, kRight)) << ',' << px(sy.map(pick(p), kBottom, kTop));
    }
    os << "\"/>\n";
}

}  // namespace

void write_tail_plot_svg(std::ostream& os, const std::vector<TailCurvePoint>& curve,
                         const SvgOptions& opts) {
    double umin = curve.empty() ? 1.0 : curve.front().u;
    double umax = curve.empty() ? 2.0 : curve.back().u;
    if (umax <= umin) {
        umin = opts.log_x ? umin * 0.5 : umin - 1.0;
        umax = opts.log_x ? umax * 2.0 : umax + 1.0;
    }
    double tmax = 0.0;
    for (const auto& p : curve) tmax = std::max(tmax, p.hi);
    double ymax = std::min(1.0, std::ceil(tmax * 10.0 + 0.5) / 10.0);
    if (ymax <= 0.0) ymax = 1.0;

    const Scale sx{umin, umax, opts.log_x};
    const Scale sy{0.0, ymax, false};

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 500\" "
          "font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" fill=\"white\"/>\n";

    // frame
    os << "  <rect x=\"" << px(kLeft) << "\" y=\"" << px(kTop) << "\" width=\""
       << px(kRight - kLeft) << "\" height=\"" << px(kBottom - kTop)
       << "\" fill=\"none\" stroke=\"black\"/>\n";

    // left axis: t ticks every 0.1
    for (double t = 0.0; t <= ymax + 1e-12; t += 0.1) {
        const double y = sy.map(t, kBottom, kTop);
        os << "  <line x1=\"" << px(kLeft - 5) << "\" y1=\"" << px(y) << "\" x2=\"" << px(kLeft)
           << "\" y2=\"" << px(y) << "\" stroke=\"black\"/>\n";
        os << "  <text x=\"" << px(kLeft - 9) << "\" y=\"" << px(y + 4)
           << "\" text-anchor=\"end\">" << label(t) << "</text>\n";
    }

    // x axis: 6 ticks (decades when log)
    for (int i = 0; i <= 5; ++i) {
        const double f = static_cast<double>(i) / 5.0;
        const double u = opts.log_x ? umin * std::pow(umax / umin, f)
                                    : umin + f * (umax - umin);
        const double x = sx.map(u, kLeft, kRight);
        os << "  <line x1=\"" << px(x) << "\" y1=\"" << px(kBottom) << "\" x2=\"" << px(x)
           << "\" y2=\"" << px(kBottom + 5) << "\" stroke=\"black\"/>\n";
        os << "  <text x=\"" << px(x) << "\" y=\"" << px(kBottom + 20)
           << "\" text-anchor=\"middle\">" << label(u) << "</text>\n";
    }

    // right axis: implied shape parameter, ticks placed at y(t(alpha))
    for (double a : {0.5, 1.0, 1.5, 2.0, 3.0}) {
        const double t = pareto_tail_value(a);
        if (t > ymax) continue;
        const double y = sy.map(t, kBottom, kTop);
        os << "  <line x1=\"" << px(kRight) << "\" y1=\"" << px(y) << "\" x2=\""
           << px(kRight + 5) << "\" y2=\"" << px(y) << "\" stroke=\"black\"/>\n";
        os << "  <text x=\"" << px(kRight + 9) << "\" y=\"" << px(y + 4)
           << "\" text-anchor=\"start\">" << label(a) << "</text>\n";
    }

    // axis titles
    os << "  <text x=\"" << px(0.5 * (kLeft + kRight)) << "\" y=\"" << px(kBottom + 45)
       << "\" text-anchor=\"middle\">threshold u" << (opts.log_x ? " (log scale)" : "")
       << "</text>\n";
    os << "  <text x=\"16\" y=\"" << px(0.5 * (kTop + kBottom))
       << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << px(0.5 * (kTop + kBottom))
       << ")\">tail statistic</text>\n";
    os << "  <text x=\"" << px(kWidth - 16) << "\" y=\"" << px(0.5 * (kTop + kBottom))
       << "\" text-anchor=\"middle\" transform=\"rotate(90 " << px(kWidth - 16) << ' '
       << px(0.5 * (kTop + kBottom)) << ")\">implied shape</text>\n";

    if (!curve.empty()) {
        polyline(os, curve, sx, sy, [](const TailCurvePoint& p) { return p.lo; },
                 "stroke=\"dimgray\" stroke-dasharray=\"6 4\"");
        polyline(os, curve, sx, sy, [](const TailCurvePoint& p) { return p.hi; },
                 "stroke=\"dimgray\" stroke-dasharray=\"6 4\"");
        polyline(os, curve, sx, sy, [](const TailCurvePoint& p) { return p.t_hat; },
                 "stroke=\"black\" stroke-width=\"1.5\"");
        if (curve.size() == 1) {
            os << "  <circle cx=\"" << px(sx.map(curve[0].u, kLeft, kRight)) << "\" cy=\""
               << px(sy.map(curve[0].t_hat, kBottom, kTop)) << "\" r=\"3\" fill=\"black\"/>\n";
        }
    }
    os << "</svg>\n";
    (void)kHeight;
}

}  // namespace ptail::io
