// ptail: Pareto tail plot and tail-index tools.
//
// Subcommands: plot, tvalue, alpha, simulate, coverage, figure2.
// Exit codes: 0 ok, 2 usage/config, 3 data, 4 numeric.

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ptail/coverage.hpp"
#include "ptail/curve.hpp"
#include "ptail/distributions.hpp"
#include "ptail/error.hpp"
#include "ptail/io/config.hpp"
#include "ptail/io/csv.hpp"
#include "ptail/io/ingest.hpp"
#include "ptail/io/report.hpp"
#include "ptail/io/svg.hpp"
#include "ptail/kernels.hpp"
#include "ptail/tail_math.hpp"
#include "ptail/variance.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitNumeric = 4;

// flag wins over PTAIL_SEED, which wins over the config value
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag_seed,
                           const std::optional<std::uint64_t>& config_seed,
                           std::uint64_t fallback) {
    if (flag_seed) return *flag_seed;
    if (const char* env = std::getenv("PTAIL_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0') return v;
        throw ptail::config_error("PTAIL_SEED is not an integer: " + std::string(env));
    }
    if (config_seed) return *config_seed;
    return fallback;
}

std::map<std::string, double> parse_kv_params(const std::vector<std::string>& kvs,
                                              std::map<std::string, std::string>* raw = nullptr) {
    std::map<std::string, double> params;
    for (const auto& kv : kvs) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw ptail::config_error("expected key=value, got '" + kv + "'", {kv});
        const std::string key = kv.substr(0, eq);
        const std::string value = kv.substr(eq + 1);
        if (raw) (*raw)[key] = value;
        params[key] = ptail::io::to_double(key, value);
    }
    return params;
}

struct OutputTarget {
    std::string path;  // empty = stdout

    template <class Fn>
    void write(Fn&& fn) const {
        if (path.empty()) {
            fn(std::cout);
            std::cout.flush();
            return;
        }
        std::ofstream os(path, std::ios::binary);
        if (!os) throw ptail::data_error("cannot open output file: " + path);
        fn(os);
    }
};

int run_plot(const ptail::io::IngestSpec& ingest, ptail::PlotOptions opts,
             const std::string& method_name, bool log_x, const std::string& format,
             const OutputTarget& out) {
    if (!method_name.empty() && method_name != "auto")
        opts.method = ptail::variance_kind_from_string(method_name);
    const ptail::SortedSample sample = ptail::io::load_sample(ingest);
    const auto curve = ptail::build_tail_curve(sample, opts);
    if (curve.empty())
        throw ptail::insufficient_exceedances(0, 2);
    out.write([&](std::ostream& os) {
        if (format == "csv") {
            ptail::io::write_tail_curve_csv(os, curve);
        } else if (format == "json") {
            ptail::io::write_tail_curve_json(os, curve);
        } else {
            ptail::io::write_tail_plot_svg(os, curve, {log_x, opts.level});
        }
    });
    return 0;
}

int run_coverage_cmd(const std::string& config_path, const std::vector<std::string>& methods_flag,
                     std::optional<std::uint64_t> reps_flag,
                     std::optional<int> bootstrap_reps_flag,
                     std::optional<std::uint64_t> seed_flag, std::optional<unsigned> threads_flag,
                     const std::string& format, const OutputTarget& out) {
    const auto cfg = ptail::io::parse_config_file(config_path);
    auto section = cfg.section("coverage");
    if (section.empty() && !cfg.sections.count("coverage"))
        throw ptail::config_error("config has no [coverage] section", {"coverage"});

    static const std::map<std::string, int> known = {
        {"dist", 1},   {"u", 1},    {"n_eff", 1},   {"level", 1},         {"reps", 1},
        {"methods", 1}, {"seed", 1}, {"threads", 1}, {"bootstrap_reps", 1}};

    ptail::CoverageConfig config;
    std::map<std::string, double> dist_params;
    std::string family;
    std::optional<std::uint64_t> config_seed;
    for (const auto& [key, value] : section) {
        if (key == "dist") {
            family = value;
        } else if (key == "u") {
            config.u = ptail::io::to_double(key, value);
        } else if (key == "n_eff") {
            config.n_eff = ptail::io::to_double(key, value);
        } else if (key == "level") {
            config.level = ptail::io::to_double(key, value);
        } else if (key == "reps") {
            config.reps = static_cast<std::size_t>(ptail::io::to_int(key, value));
        } else if (key == "bootstrap_reps") {
            config.bootstrap_reps = static_cast<int>(ptail::io::to_int(key, value));
        } else if (key == "seed") {
            config_seed = static_cast<std::uint64_t>(ptail::io::to_int(key, value));
        } else if (key == "threads") {
            config.threads = static_cast<unsigned>(ptail::io::to_int(key, value));
        } else if (key == "methods") {
            config.methods.clear();
            for (const auto& name : ptail::io::split_list(value))
                config.methods.push_back(ptail::variance_kind_from_string(name));
        } else if (!known.count(key)) {
            dist_params[key] = ptail::io::to_double(key, value);
        }
    }
    if (family.empty())
        throw ptail::config_error("config [coverage] is missing the 'dist' key", {"dist"});
    config.dist = ptail::make_distribution(family, dist_params);

    if (!methods_flag.empty()) {
        config.methods.clear();
        for (const auto& name : methods_flag)
            for (const auto& piece : ptail::io::split_list(name))
                config.methods.push_back(ptail::variance_kind_from_string(piece));
    }
    if (reps_flag) config.reps = *reps_flag;
    if (bootstrap_reps_flag) config.bootstrap_reps = *bootstrap_reps_flag;
    if (threads_flag) config.threads = *threads_flag;
    config.seed = resolve_seed(seed_flag, config_seed, 0);

    const ptail::CoverageReport report = ptail::run_coverage(config);
    out.write([&](std::ostream& os) {
        if (format == "json")
            ptail::io::write_coverage_json(os, report);
        else
            ptail::io::write_coverage_table(os, report);
    });
    return 0;
}

int run_simulate(const std::string& family, const std::vector<std::string>& kvs,
                 std::optional<std::uint64_t> seed_flag, const OutputTarget& out) {
    std::map<std::string, double> params = parse_kv_params(kvs);
    std::size_t n = 0;
    std::optional<std::uint64_t> kv_seed;
    if (auto it = params.find("n"); it != params.end()) {
        n = static_cast<std::size_t>(it->second);
        params.erase(it);
    } else {
        throw ptail::config_error("simulate: missing n=<count>", {"n"});
    }
    if (auto it = params.find("seed"); it != params.end()) {
        kv_seed = static_cast<std::uint64_t>(it->second);
        params.erase(it);
    }
    const auto dist = ptail::make_distribution(family, params);
    const std::uint64_t seed = resolve_seed(seed_flag, kv_seed, 0);
    ptail::RngStream rng(seed, 0);
    const ptail::SortedSample sample = ptail::sample_sorted(*dist, n, rng);
    out.write([&](std::ostream& os) {
        char buf[40];
        for (double v : sample.values()) {
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            os << buf << '\n';
        }
    });
    return 0;
}

int dispatch_error(const std::exception& e, const char* stage) {
    std::cerr << "ptail: " << stage << ": " << e.what() << '\n';
    if (dynamic_cast<const ptail::data_error*>(&e)) return kExitData;
    if (dynamic_cast<const ptail::config_error*>(&e)) return kExitUsage;
    if (dynamic_cast<const std::domain_error*>(&e)) return kExitUsage;
    if (dynamic_cast<const std::invalid_argument*>(&e)) return kExitUsage;
    return kExitNumeric;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pareto tail plot without moment restrictions"};
    app.require_subcommand(1);

    // ---- plot ----
    auto* plot = app.add_subcommand("plot", "tail plot with confidence bands from a data file");
    ptail::io::IngestSpec ingest;
    ptail::PlotOptions plot_opts;
    std::string plot_method = "auto";
    std::string plot_format = "csv";
    std::string plot_delim = ",";
    bool log_x = false;
    OutputTarget plot_out;
    std::optional<std::uint64_t> plot_seed;
    plot->add_option("--input,-i", ingest.path, "input file ('-' for stdin)")->required();
    plot->add_option("--column,-c", ingest.column, "column index or name (default 0)");
    plot->add_option("--delimiter,-d", plot_delim, "field delimiter (default ',')");
    plot->add_flag("--header", ingest.header, "first row is a header");
    plot->add_option("--min-threshold", [&ingest](const std::vector<std::string>& v) {
        ingest.min_threshold = std::stod(v[0]);
        return true;
    }, "keep only values >= this (before rescale)");
    plot->add_option("--rescale", [&ingest](const std::vector<std::string>& v) {
        ingest.rescale = std::stod(v[0]);
        return true;
    }, "divide kept values by this");
    plot->add_option("--quantile,-q", plot_opts.quantile_cap,
                     "cap thresholds at this sample quantile (default 0.995)");
    plot->add_option("--level", plot_opts.level, "confidence level (default 0.95)");
    plot->add_option("--method", plot_method,
                     "variance method: auto|plugin|jackknife|bootstrap (default auto)");
    plot->add_option("--bootstrap-reps", plot_opts.bootstrap_reps,
                     "bootstrap replications (default 999)");
    plot->add_option("--seed", [&plot_seed](const std::vector<std::string>& v) {
        plot_seed = std::stoull(v[0]);
        return true;
    }, "seed for the bootstrap method");
    plot->add_flag("--log-x", log_x, "log-scaled x axis (SVG geometry only)");
    plot->add_option("--format,-f", plot_format, "csv|json|svg (default csv)")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
    plot->add_option("--output,-o", plot_out.path, "output file (default stdout)");

    // ---- tvalue / alpha ----
    auto* tvalue = app.add_subcommand("tvalue", "tail value of a Pareto shape");
    double tv_alpha = 0.0;
    tvalue->add_option("alpha", tv_alpha, "shape parameter")->required();

    auto* alpha_cmd = app.add_subcommand("alpha", "shape parameter implied by a tail value");
    double al_t = 0.0;
    alpha_cmd->add_option("t", al_t, "tail value in (0,1)")->required();

    // ---- simulate ----
    auto* simulate = app.add_subcommand("simulate", "draw a sample from a distribution");
    std::string sim_family;
    std::vector<std::string> sim_params;
    OutputTarget sim_out;
    std::optional<std::uint64_t> sim_seed;
    simulate->add_option("family", sim_family, "family name (pareto1, gpd, weibull, ...)")
        ->required();
    simulate->add_option("params", sim_params, "key=value parameters incl. n= and seed=");
    simulate->add_option("--seed", [&sim_seed](const std::vector<std::string>& v) {
        sim_seed = std::stoull(v[0]);
        return true;
    }, "seed (overrides seed= and PTAIL_SEED)");
    simulate->add_option("--output,-o", sim_out.path, "output file (default stdout)");

    // ---- coverage ----
    auto* coverage = app.add_subcommand("coverage", "Monte Carlo CI coverage study");
    std::string cov_config;
    std::vector<std::string> cov_methods;
    std::optional<std::uint64_t> cov_reps, cov_seed;
    std::optional<int> cov_breps;
    std::optional<unsigned> cov_threads;
    std::string cov_format = "table";
    OutputTarget cov_out;
    coverage->add_option("--config", cov_config, "config file with a [coverage] section")
        ->required();
    coverage->add_option("--methods", cov_methods, "subset of plugin,jackknife,bootstrap");
    coverage->add_option("--reps", [&cov_reps](const std::vector<std::string>& v) {
        cov_reps = std::stoull(v[0]);
        return true;
    }, "Monte Carlo replicates");
    coverage->add_option("--bootstrap-reps", [&cov_breps](const std::vector<std::string>& v) {
        cov_breps = std::stoi(v[0]);
        return true;
    }, "bootstrap replications per replicate");
    coverage->add_option("--seed", [&cov_seed](const std::vector<std::string>& v) {
        cov_seed = std::stoull(v[0]);
        return true;
    }, "seed (wins over PTAIL_SEED and the config)");
    coverage->add_option("--threads", [&cov_threads](const std::vector<std::string>& v) {
        cov_threads = static_cast<unsigned>(std::stoul(v[0]));
        return true;
    }, "worker threads (0 = all cores)");
    coverage->add_option("--format", cov_format, "table|json (default table)")
        ->check(CLI::IsMember({"table", "json"}));
    coverage->add_option("--output,-o", cov_out.path, "output file (default stdout)");

    // ---- figure2 ----
    auto* figure2 = app.add_subcommand("figure2", "simulated tail curves for a preset");
    std::string fig_preset;
    std::size_t fig_n = 10000;
    std::uint64_t fig_seed = 1;
    std::string fig_format = "csv";
    OutputTarget fig_out;
    figure2->add_option("--preset", fig_preset, "pareto|loggamma|shiftedgamma")->required();
    figure2->add_option("--n", fig_n, "sample size (default 10000)");
    figure2->add_option("--seed", fig_seed, "seed (default 1)");
    figure2->add_option("--format", fig_format, "csv|json (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    figure2->add_option("--output,-o", fig_out.path, "output file (default stdout)");

    // ---- kernels (diagnostics) ----
    auto* kernels_cmd = app.add_subcommand("kernels", "print the active SIMD kernel variant");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (plot->parsed()) {
            if (plot_delim.size() != 1)
                throw ptail::config_error("--delimiter must be a single character");
            ingest.delimiter = plot_delim[0];
            plot_opts.seed = plot_seed.value_or(0);
            if (!plot_seed) plot_opts.seed = resolve_seed(plot_seed, std::nullopt, 0);
            return run_plot(ingest, plot_opts, plot_method, log_x, plot_format, plot_out);
        }
        if (tvalue->parsed()) {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.12g", ptail::pareto_tail_value(tv_alpha));
            std::printf("%s\n", buf);
            return 0;
        }
        if (alpha_cmd->parsed()) {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.12g", ptail::invert_tail_value(al_t));
            std::printf("%s\n", buf);
            return 0;
        }
        if (simulate->parsed()) return run_simulate(sim_family, sim_params, sim_seed, sim_out);
        if (coverage->parsed())
            return run_coverage_cmd(cov_config, cov_methods, cov_reps, cov_breps, cov_seed,
                                    cov_threads, cov_format, cov_out);
        if (figure2->parsed()) {
            const auto result = ptail::figure2_curves(fig_preset, fig_n, fig_seed);
            fig_out.write([&](std::ostream& os) {
                if (fig_format == "json")
                    ptail::io::write_figure2_json(os, result);
                else
                    ptail::io::write_figure2_csv(os, result);
            });
            return 0;
        }
        if (kernels_cmd->parsed()) {
            std::printf("%s\n", ptail::kernels::active_table().name);
            return 0;
        }
    } catch (const std::exception& e) {
        return dispatch_error(e, app.get_subcommands().empty()
                                     ? "error"
                                     : app.get_subcommands()[0]->get_name().c_str());
    }
    return kExitUsage;
}
