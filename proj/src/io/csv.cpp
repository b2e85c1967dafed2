#include "ptail/io/csv.hpp"

#include <cstdio>

namespace ptail::io {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

std::string csv_escape(const std::string& field) {
    bool needs_quote = false;
    for (char c : field)
        if (c == ',' || c == '"' || c == '\n' || c == '\r') needs_quote = true;
    if (!needs_quote) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_tail_curve_csv(std::ostream& os, const std::vector<TailCurvePoint>& curve) {
    os << "u,m,t_hat,ci_lo,ci_hi,alpha_hat\n";
    for (const auto& p : curve) {
        os << format_double(p.u) << ',' << p.m << ',' << format_double(p.t_hat) << ','
           << format_double(p.lo) << ',' << format_double(p.hi) << ','
           << format_double(p.alpha_hat) << '\n';
    }
}

}  // namespace ptail::io
