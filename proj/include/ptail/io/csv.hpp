#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "ptail/curve.hpp"

namespace ptail::io {

// 15 significant digits; shortest form via %.15g.
std::string format_double(double v);

// RFC-4180 field quoting (quotes only when the field needs it), LF endings.
std::string csv_escape(const std::string& field);

// Stable schema: header "u,m,t_hat,ci_lo,ci_hi,alpha_hat".
void write_tail_curve_csv(std::ostream& os, const std::vector<TailCurvePoint>& curve);

}  // namespace ptail::io
