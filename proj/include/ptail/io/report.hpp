#pragma once

#include <ostream>

#include "ptail/coverage.hpp"
#include "ptail/curve.hpp"

namespace ptail::io {

// Coverage report as JSON and as an aligned text table (one row per method).
void write_coverage_json(std::ostream& os, const CoverageReport& report);
void write_coverage_table(std::ostream& os, const CoverageReport& report);

void write_tail_curve_json(std::ostream& os, const std::vector<TailCurvePoint>& curve);

void write_figure2_csv(std::ostream& os, const Figure2Result& result);
void write_figure2_json(std::ostream& os, const Figure2Result& result);

}  // namespace ptail::io
