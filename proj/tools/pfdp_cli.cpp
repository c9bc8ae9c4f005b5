#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pfdp/core/pfd.hpp"
#include "pfdp/core/transforms.hpp"
#include "pfdp/errors.hpp"
#include "pfdp/estimation/moments.hpp"
#include "pfdp/estimation/study.hpp"
#include "pfdp/numerics/monte_carlo.hpp"
#include "pfdp/numerics/quadrature.hpp"
#include "pfdp/numerics/rng.hpp"
#include "pfdp/pipeline/analyze.hpp"
#include "pfdp/pipeline/series.hpp"
#include "pfdp/processes/kundu.hpp"
#include "pfdp/processes/maxar.hpp"
#include "pfdp/processes/moment_oracles.hpp"

namespace {

using namespace pfdp;
using nlohmann::ordered_json;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

std::string g_invocation;

// The worker count cannot change any artifact, so it is left out.
std::string invocation_of(int argc, char** argv) {
    std::string out = "pfdp";
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--workers") {
            ++i;
            continue;
        }
        if (arg.rfind("--workers=", 0) == 0) {
            continue;
        }
        out += ' ';
        out += arg;
    }
    return out;
}

std::string screen(double v) {
    if (!std::isfinite(v)) {
        return "nan";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

// Writes to `path`, or stdout when empty.
template <class Fn>
void emit(const std::string& path, Fn&& write) {
    if (path.empty()) {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open output file " + path);
    }
    write(out);
    if (!out) {
        throw Error("failed writing " + path);
    }
}

void emit_json(const std::string& path, ordered_json j) {
    j["invocation"] = g_invocation;
    emit(path, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open input file " + path);
    }
    return in;
}

struct Grid {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t count = 0;

    // Cell midpoints lo + (hi - lo)(i + 1/2)/count, so open endpoints are never hit.
    [[nodiscard]] std::vector<double> points() const {
        std::vector<double> p(count);
        for (std::size_t i = 0; i < count; ++i) {
            p[i] = lo + (hi - lo) * (static_cast<double>(i) + 0.5) / static_cast<double>(count);
        }
        return p;
    }
};

Grid parse_grid(const std::string& text, const std::string& flag) {
    Grid g;
    char c1 = 0;
    char c2 = 0;
    std::istringstream is(text);
    if (!(is >> g.lo >> c1 >> g.hi >> c2 >> g.count) || c1 != ':' || c2 != ':' || !is.eof() ||
        g.count == 0 || !(g.hi > g.lo)) {
        throw CLI::ValidationError(flag, "expected lo:hi:count with lo < hi and count >= 1");
    }
    return g;
}

// ---- simulate ------------------------------------------------------------

struct SimulateArgs {
    std::string model;
    std::vector<double> alphas;
    bool reverse = false;
    double alpha = 0.0;
    double delta = 0.0;
    std::optional<double> x0;
    std::vector<double> inner;
    double innovation = 0.0;
    std::vector<double> start;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    std::string transform;
    double transform_param = 1.0;
    std::string format = "csv";
    std::string out;
};

void run_simulate(const SimulateArgs& a) {
    numerics::RngStream stream(a.seed, a.stream);
    processes::SamplePath path;
    if (a.model == "kundu") {
        if (a.alphas.empty()) {
            throw CLI::RequiredError("--alphas");
        }
        const processes::KunduOrderParams params(
            a.alphas, a.reverse ? processes::Direction::reverse : processes::Direction::forward);
        path = processes::simulate_kundu(params, a.n, stream);
    } else if (a.model == "maxar") {
        const processes::MaxArParams params(a.alpha, a.delta);
        path = processes::simulate_maxar(
            params, a.n, stream,
            a.x0 ? processes::MaxArStart::fixed(*a.x0) : processes::MaxArStart::stationary());
    } else {
        const processes::HigherMaxArParams params(a.inner, a.innovation, a.start);
        path = processes::simulate_maxar_higher(params, a.n, stream);
    }

    std::vector<double> values = path.values;
    std::optional<core::QuantileSpec> spec;
    if (!a.transform.empty()) {
        spec = core::QuantileSpec::from_name(a.transform, a.transform_param);
        values = core::prh_transform(path.values, *spec);
    }

    if (a.format == "json") {
        ordered_json j = processes::to_json(path);
        if (spec) {
            j["transform"] = {{"family", spec->name()}, {"parameter", spec->parameter()}};
            j["values"] = values;
        }
        emit_json(a.out, std::move(j));
        return;
    }
    std::vector<std::string> meta{
        "invocation: " + g_invocation,
        "model: " + std::string(processes::to_string(path.model_tag)),
        "generator: " + std::string(numerics::kGeneratorName),
        "master_seed: " + std::to_string(a.seed),
        "stream_id: " + std::to_string(a.stream),
        "n: " + std::to_string(a.n),
    };
    if (spec) {
        meta.push_back("transform: " + spec->name() + " " +
                       processes::format_full(spec->parameter()));
    }
    emit(a.out, [&](std::ostream& os) {
        if (!spec) {
            processes::write_csv(path, os, meta);
            return;
        }
        for (const auto& line : meta) {
            os << "# " << line << '\n';
        }
        os << "y\n";
        for (double v : values) {
            os << processes::format_full(v) << '\n';
        }
    });
}

// ---- moments -------------------------------------------------------------

struct MomentsArgs {
    std::string model;
    std::vector<double> alphas;
    double alpha = 0.0;
    double delta = 0.0;
};

void run_moments(const MomentsArgs& a) {
    std::vector<std::pair<std::string, double>> rows;
    if (a.model == "kundu") {
        if (a.alphas.empty()) {
            throw CLI::RequiredError("--alphas");
        }
        const processes::KunduOrderParams params(a.alphas);
        const auto mv = processes::kundu_mean_var(params);
        rows = {{"shape", params.total_shape()}, {"mean", mv.mean}, {"variance", mv.variance}};
        if (params.order() == 1) {
            const double al = a.alphas[0];
            const double be = a.alphas[1];
            const auto op = processes::kundu_order_probs(al, be);
            rows.emplace_back("cross_moment", processes::kundu_cross_moment(al, be));
            rows.emplace_back("lag1_corr", processes::kundu_lag_corr(al, be, 1));
            rows.emplace_back("p_ascent", op.less);
            rows.emplace_back("p_descent", op.greater);
            rows.emplace_back("p_tie", op.tie);
        }
    } else {
        const processes::MaxArParams params(a.alpha, a.delta);
        const auto mv = core::pfd_mean_var(core::PfdLaw(a.alpha));
        rows = {{"shape", a.alpha},
                {"mean", mv.mean},
                {"variance", mv.variance},
                {"cross_moment", processes::maxar_cross_moment(params)},
                {"lag1_corr", processes::maxar_lag1_corr(params)},
                {"p_descent", processes::maxar_descent_prob(params)}};
    }
    for (const auto& [name, v] : rows) {
        std::cout << name << ' ' << screen(v) << '\n';
    }
}

// ---- corr-curve ----------------------------------------------------------

struct CorrCurveArgs {
    std::string model;
    double alpha = 0.0;
    std::string delta_grid;
    std::string beta_grid;
    std::string out;
};

void run_corr_curve(const CorrCurveArgs& a) {
    std::string column;
    std::vector<std::pair<double, double>> rows;
    if (a.model == "maxar") {
        if (a.delta_grid.empty()) {
            throw CLI::RequiredError("--delta-grid");
        }
        column = "delta";
        for (double d : parse_grid(a.delta_grid, "--delta-grid").points()) {
            rows.emplace_back(d, processes::maxar_lag1_corr({a.alpha, d}));
        }
    } else {
        if (a.beta_grid.empty()) {
            throw CLI::RequiredError("--beta-grid");
        }
        column = "beta";
        for (double b : parse_grid(a.beta_grid, "--beta-grid").points()) {
            rows.emplace_back(b, processes::kundu_lag_corr(a.alpha, b, 1));
        }
    }
    emit(a.out, [&](std::ostream& os) {
        os << "# invocation: " << g_invocation << '\n';
        os << "# model: " << a.model << '\n';
        os << "# alpha: " << processes::format_full(a.alpha) << '\n';
        os << column << ",corr\n";
        for (const auto& [x, c] : rows) {
            os << processes::format_full(x) << ',' << processes::format_full(c) << '\n';
        }
    });
}

// ---- fit -----------------------------------------------------------------

struct FitArgs {
    std::string model;
    std::string input;
    std::string out;
};

void run_fit(const FitArgs& a) {
    auto in = open_input(a.input);
    const processes::SamplePath path = processes::read_path_csv(in);
    path.validate();
    const auto stats = estimation::compute_stats(path.values);

    ordered_json j;
    j["schema_version"] = 1;
    j["kind"] = "moment_fit";
    j["model"] = a.model;
    j["sample"] = {{"m", stats.m},
                   {"mean", stats.mean},
                   {"ascent", stats.ascent},
                   {"descent", stats.descent},
                   {"tie", stats.tie}};
    std::vector<std::pair<std::string, double>> screen_rows;
    if (a.model == "kundu") {
        const auto e = estimation::fit_kundu_mom(stats);
        j["estimate"] = {{"alpha", e.alpha},
                         {"beta", e.beta},
                         {"branch", estimation::to_string(e.branch)},
                         {"ordering_mismatch", e.ordering_mismatch}};
        screen_rows = {{"alpha", e.alpha}, {"beta", e.beta}};
        std::cout << "branch " << estimation::to_string(e.branch) << '\n';
    } else {
        const auto e = estimation::fit_maxar_mom(stats);
        j["estimate"] = {{"alpha", e.alpha}, {"delta", e.delta}, {"boundary", e.boundary}};
        screen_rows = {{"alpha", e.alpha}, {"delta", e.delta}};
        std::cout << "boundary " << (e.boundary ? "true" : "false") << '\n';
    }
    for (const auto& [name, v] : screen_rows) {
        std::cout << name << ' ' << screen(v) << '\n';
    }
    if (!a.out.empty()) {
        emit_json(a.out, std::move(j));
    }
}

// ---- study ---------------------------------------------------------------

struct StudyArgs {
    std::string model;
    std::vector<double> params;
    std::vector<std::size_t> sizes{20, 30, 50, 100, 200, 500};
    std::size_t replicates = 2000;
    std::uint64_t seed = 0;
    std::size_t bins = 20;
    unsigned workers = 1;
    std::string format = "json";
    std::string out;
};

void run_study_cmd(const StudyArgs& a) {
    if (a.params.size() != 2) {
        throw CLI::ValidationError("--params", "expected two comma-separated values");
    }
    estimation::StudyConfig config;
    config.model = a.model == "kundu" ? estimation::StudyModel::kundu : estimation::StudyModel::maxar;
    config.true_params = {a.params[0], a.params[1]};
    config.path_sizes = a.sizes;
    config.replicates = a.replicates;
    config.master_seed = a.seed;
    config.histogram_bins = a.bins;
    const auto report = estimation::run_study(config, a.workers);

    if (a.format == "csv") {
        emit(a.out, [&](std::ostream& os) {
            estimation::write_csv(report, os,
                                  {"invocation: " + g_invocation,
                                   "generator: " + std::string(numerics::kGeneratorName)});
        });
    } else {
        emit_json(a.out, estimation::to_json(report));
    }
    if (!a.out.empty()) {
        const auto names = config.parameter_names();
        for (const auto& s : report.sizes) {
            std::cout << "m=" << s.size;
            for (std::size_t p = 0; p < 2; ++p) {
                std::cout << ' ' << names[p] << "_mean " << screen(s.estimates[p].mean) << ' '
                          << names[p] << "_sd " << screen(s.estimates[p].sd);
            }
            std::cout << " failures " << s.degenerate_failures + s.infeasible_failures << '\n';
        }
    }
}

// ---- analyze -------------------------------------------------------------

struct AnalyzeArgs {
    std::string input;
    std::size_t paths = 200;
    std::size_t bins = 20;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    std::string out;
};

void run_analyze(const AnalyzeArgs& a) {
    auto in = open_input(a.input);
    const auto series = pipeline::load_series(in);
    pipeline::AnalyzeOptions options;
    options.predictor_paths = a.paths;
    options.bins = a.bins;
    options.master_seed = a.seed;
    options.workers = a.workers;
    const auto cmp = pipeline::analyze(series, options);
    emit_json(a.out, pipeline::report(cmp));
    if (!a.out.empty()) {
        std::cout << "kundu alpha " << screen(cmp.kundu.estimate.alpha) << " beta "
                  << screen(cmp.kundu.estimate.beta) << " mse " << screen(cmp.mse_kundu) << '\n';
        std::cout << "maxar alpha " << screen(cmp.maxar.estimate.alpha) << " delta "
                  << screen(cmp.maxar.estimate.delta) << " mse " << screen(cmp.mse_maxar) << '\n';
        std::cout << "winner " << processes::to_string(cmp.winner) << '\n';
    }
}

// ---- oracle --------------------------------------------------------------

struct OracleArgs {
    std::string check = "cross-moments";
    double tol = 1e-6;
    std::string out;
};

int run_oracle(const OracleArgs& a) {
    numerics::QuadratureOptions q;
    q.tol = std::min(1e-8, a.tol / 10.0);
    const auto rows = processes::cross_moment_oracle_suite(q);
    double max_err = 0.0;
    ordered_json table = ordered_json::array();
    for (const auto& r : rows) {
        max_err = std::max(max_err, r.abs_error());
        std::cout << r.process << ' ' << screen(r.p1) << ' ' << screen(r.p2) << " closed "
                  << screen(r.closed_form) << " quad " << screen(r.quadrature) << " err "
                  << r.abs_error() << '\n';
        table.push_back({{"process", r.process},
                         {"p1", r.p1},
                         {"p2", r.p2},
                         {"closed_form", r.closed_form},
                         {"quadrature", r.quadrature},
                         {"quadrature_error", r.quadrature_error},
                         {"abs_error", r.abs_error()}});
    }
    std::cout << "max_abs_error " << max_err << '\n';
    const bool pass = max_err < a.tol;
    if (!a.out.empty()) {
        ordered_json j;
        j["schema_version"] = 1;
        j["kind"] = "oracle_check";
        j["check"] = a.check;
        j["tol"] = a.tol;
        j["max_abs_error"] = max_err;
        j["pass"] = pass;
        j["rows"] = std::move(table);
        emit_json(a.out, std::move(j));
    }
    if (!pass) {
        std::cerr << "error: max absolute error " << max_err << " exceeds tolerance " << a.tol
                  << '\n';
        return kExitDomain;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    g_invocation = invocation_of(argc, argv);
    CLI::App app{"Power-function-distribution processes: simulation, moments, fitting"};
    app.name("pfdp");
    app.require_subcommand(1);

    const unsigned default_workers = numerics::default_workers();
    int status = 0;

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Simulate a sample path");
    simulate->add_option("--model", sim.model)
        ->required()
        ->check(CLI::IsMember({"kundu", "maxar", "maxar-higher"}));
    simulate->add_option("--alphas", sim.alphas, "Kundu exponents a0,...,ak")->delimiter(',');
    simulate->add_flag("--reverse", sim.reverse, "Kundu reverse direction");
    simulate->add_option("--alpha", sim.alpha, "max-AR marginal shape");
    simulate->add_option("--delta", sim.delta, "max-AR innovation shape");
    simulate->add_option("--x0", sim.x0, "max-AR fixed start (default: stationary)");
    simulate->add_option("--inner", sim.inner, "higher-order exponents d_k,...,d_1")->delimiter(',');
    simulate->add_option("--innovation", sim.innovation, "higher-order innovation exponent");
    simulate->add_option("--start", sim.start, "higher-order start values")->delimiter(',');
    simulate->add_option("--n", sim.n)->required()->check(CLI::PositiveNumber);
    simulate->add_option("--seed", sim.seed)->required();
    simulate->add_option("--stream", sim.stream, "stream id (default 0)");
    simulate->add_option("--transform", sim.transform, "marginal quantile transform")
        ->check(CLI::IsMember({"power", "exponential", "pareto"}));
    simulate->add_option("--transform-param", sim.transform_param);
    simulate->add_option("--format", sim.format)->check(CLI::IsMember({"csv", "json"}));
    simulate->add_option("--out", sim.out, "output file (default stdout)");
    simulate->callback([&] { run_simulate(sim); });

    MomentsArgs mom;
    auto* moments = app.add_subcommand("moments", "Print closed-form moments");
    moments->add_option("--model", mom.model)->required()->check(CLI::IsMember({"kundu", "maxar"}));
    moments->add_option("--alphas", mom.alphas)->delimiter(',');
    moments->add_option("--alpha", mom.alpha);
    moments->add_option("--delta", mom.delta);
    moments->callback([&] { run_moments(mom); });

    CorrCurveArgs cc;
    auto* corr = app.add_subcommand("corr-curve", "Lag-1 correlation over a parameter grid");
    corr->add_option("--model", cc.model)->required()->check(CLI::IsMember({"kundu", "maxar"}));
    corr->add_option("--alpha", cc.alpha)->required();
    corr->add_option("--delta-grid", cc.delta_grid, "lo:hi:count (cell midpoints)");
    corr->add_option("--beta-grid", cc.beta_grid, "lo:hi:count (cell midpoints)");
    corr->add_option("--out", cc.out);
    corr->callback([&] { run_corr_curve(cc); });

    FitArgs fa;
    auto* fit = app.add_subcommand("fit", "Method-of-moments fit of a path CSV");
    fit->add_option("--model", fa.model)->required()->check(CLI::IsMember({"kundu", "maxar"}));
    fit->add_option("--input", fa.input)->required();
    fit->add_option("--out", fa.out, "JSON result file");
    fit->callback([&] { run_fit(fa); });

    StudyArgs st;
    st.workers = default_workers;
    auto* study = app.add_subcommand("study", "Replicated estimator study");
    study->add_option("--model", st.model)->required()->check(CLI::IsMember({"kundu", "maxar"}));
    study->add_option("--params", st.params, "true (alpha,beta) or (alpha,delta)")
        ->required()
        ->delimiter(',');
    study->add_option("--sizes", st.sizes)->delimiter(',');
    study->add_option("--replicates", st.replicates);
    study->add_option("--seed", st.seed)->required();
    study->add_option("--bins", st.bins, "histogram bins");
    study->add_option("--workers", st.workers)->check(CLI::PositiveNumber);
    study->add_option("--format", st.format)->check(CLI::IsMember({"csv", "json"}));
    study->add_option("--out", st.out);
    study->callback([&] { run_study_cmd(st); });

    AnalyzeArgs an;
    an.workers = default_workers;
    auto* analyze = app.add_subcommand("analyze", "Fit both processes to a series and compare");
    analyze->add_option("--input", an.input, "CSV with a value column")->required();
    analyze->add_option("--paths", an.paths, "predictor paths per model");
    analyze->add_option("--bins", an.bins, "conditional-mean bins");
    analyze->add_option("--seed", an.seed)->required();
    analyze->add_option("--workers", an.workers)->check(CLI::PositiveNumber);
    analyze->add_option("--out", an.out);
    analyze->callback([&] { run_analyze(an); });

    OracleArgs oa;
    auto* oracle = app.add_subcommand("oracle", "Closed form vs quadrature checks");
    oracle->add_option("--check", oa.check)->check(CLI::IsMember({"cross-moments"}));
    oracle->add_option("--tol", oa.tol)->check(CLI::PositiveNumber);
    oracle->add_option("--out", oa.out);
    oracle->callback([&] { status = run_oracle(oa); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const pfdp::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return status;
}
