#include "ptail/io/report.hpp"

#include <cstdio>
#include <iomanip>

#include <json.hpp>

#include "ptail/io/csv.hpp"

namespace ptail::io {

using ordered_json = nlohmann::ordered_json;

void write_coverage_json(std::ostream& os, const CoverageReport& r) {
    ordered_json j;
    j["distribution"] = r.dist_name;
    j["u"] = r.u;
    j["n_eff"] = r.n_eff;
    j["n"] = r.n;
    j["level"] = r.level;
    j["reps"] = r.reps;
    j["seed"] = r.seed;
    j["bootstrap_reps"] = r.bootstrap_reps;
    j["true_value"] = r.true_value;
    j["high_drop_rate"] = r.high_drop_rate;
    j["methods"] = ordered_json::array();
    for (const auto& m : r.methods) {
        ordered_json jm;
        jm["method"] = to_string(m.kind);
        jm["coverage_pct"] = m.coverage_pct;
        jm["mc_se_pct"] = m.mc_se_pct;
        jm["mean_ci_width"] = m.mean_ci_width;
        jm["evaluated"] = m.evaluated;
        jm["dropped"] = m.dropped;
        j["methods"].push_back(jm);
    }
    os << j.dump(2) << '\n';
}

void write_coverage_table(std::ostream& os, const CoverageReport& r) {
    char buf[160];
    os << "coverage of " << std::setprecision(10) << r.level << "-confidence intervals, "
       << r.dist_name << ", u=" << r.u << ", n_eff=" << r.n_eff << " (n=" << r.n << ", reps="
       << r.reps << ", seed=" << r.seed << ")\n";
    std::snprintf(buf, sizeof(buf), "%-12s %10s %8s %12s %10s %8s\n", "method", "coverage",
                  "mc_se", "mean_width", "evaluated", "dropped");
    os << buf;
    for (const auto& m : r.methods) {
        std::snprintf(buf, sizeof(buf), "%-12s %9.1f%% %8.2f %12.4f %10zu %8zu\n",
                      to_string(m.kind).c_str(), m.coverage_pct, m.mc_se_pct, m.mean_ci_width,
                      m.evaluated, m.dropped);
        os << buf;
    }
    if (r.high_drop_rate) os << "warning: more than 10% of replicates dropped\n";
}

void write_tail_curve_json(std::ostream& os, const std::vector<TailCurvePoint>& curve) {
    ordered_json j = ordered_json::array();
    for (const auto& p : curve) {
        ordered_json jp;
        jp["u"] = p.u;
        jp["m"] = p.m;
        jp["t_hat"] = p.t_hat;
        jp["ci_lo"] = p.lo;
        jp["ci_hi"] = p.hi;
        jp["alpha_hat"] = p.alpha_hat;
        j.push_back(jp);
    }
    os << j.dump(2) << '\n';
}

void write_figure2_csv(std::ostream& os, const Figure2Result& r) {
    os << "curve,u,m,t_hat\n";
    for (const auto& c : r.curves) {
        for (const auto& p : c.points) {
            os << csv_escape(c.label) << ',' << format_double(p.u) << ',' << p.m << ','
               << format_double(p.t_hat) << '\n';
        }
    }
}

void write_figure2_json(std::ostream& os, const Figure2Result& r) {
    ordered_json j;
    j["preset"] = r.preset;
    j["ref_t1"] = r.ref_t1;
    j["ref_t2"] = r.ref_t2;
    j["curves"] = ordered_json::array();
    for (const auto& c : r.curves) {
        ordered_json jc;
        jc["label"] = c.label;
        jc["points"] = ordered_json::array();
        for (const auto& p : c.points) {
            ordered_json jp;
            jp["u"] = p.u;
            jp["m"] = p.m;
            jp["t_hat"] = p.t_hat;
            jc["points"].push_back(jp);
        }
        j["curves"].push_back(jc);
    }
    os << j.dump(2) << '\n';
}

}  // namespace ptail::io
