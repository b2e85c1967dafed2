#pragma once

#include <ostream>
#include <vector>

#include "ptail/curve.hpp"

namespace ptail::io {

struct SvgOptions {
    bool log_x = false;   // geometry only; numeric values are unchanged
    double level = 0.95;  // displayed in the caption
};

// Hand-emitted tail plot, fixed 800x500 viewBox: t_hat solid, CI bounds
// dashed ("6 4"), left axis t, right axis the implied Pareto shape with ticks
// at alpha in {0.5, 1, 1.5, 2, 3}. Output is byte-stable for fixed input.
void write_tail_plot_svg(std::ostream& os, const std::vector<TailCurvePoint>& curve,
                         const SvgOptions& opts);

}  // namespace ptail::io
