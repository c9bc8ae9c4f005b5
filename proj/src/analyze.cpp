#include "pfdp/pipeline/analyze.hpp"

#include <algorithm>
#include <cmath>

#include "pfdp/core/pfd.hpp"
#include "pfdp/core/transforms.hpp"
#include "pfdp/errors.hpp"
#include "pfdp/numerics/monte_carlo.hpp"
#include "pfdp/processes/autocorr.hpp"
#include "pfdp/processes/kundu.hpp"
#include "pfdp/processes/maxar.hpp"

namespace pfdp::pipeline {
namespace {

constexpr std::size_t kMinPredictorLength = 500;

// Pulls a proportion of 0 or 1 in by half a transition.
bool correct_proportion(double& p, std::size_t m) {
    const double half = 0.5 / static_cast<double>(m - 1);
    if (p <= 0.0) {
        p = half;
        return true;
    }
    if (p >= 1.0) {
        p = 1.0 - half;
        return true;
    }
    return false;
}

nlohmann::ordered_json number_or_null(std::optional<double> v) {
    if (v && std::isfinite(*v)) {
        return *v;
    }
    return nullptr;
}

}  // namespace

double predictive_mse(std::span<const double> x, const PathSimulator& simulate, double shape,
                      std::size_t paths, std::size_t length, std::size_t bins, std::uint64_t seed,
                      std::uint64_t stream_offset, unsigned workers) {
    if (x.size() < 2) {
        throw DomainError("predictive_mse needs at least 2 observations");
    }
    if (paths < 1 || length < 2 || bins < 1) {
        throw DomainError("predictive_mse needs paths >= 1, length >= 2, bins >= 1");
    }
    const core::PfdLaw law(shape);
    std::vector<double> edges(bins - 1);
    for (std::size_t j = 1; j < bins; ++j) {
        edges[j - 1] = std::pow(static_cast<double>(j) / static_cast<double>(bins), 1.0 / shape);
    }
    const auto bin_of = [&](double v) {
        return static_cast<std::size_t>(std::upper_bound(edges.begin(), edges.end(), v) -
                                        edges.begin());
    };

    std::vector<std::vector<double>> sums(paths, std::vector<double>(bins, 0.0));
    std::vector<std::vector<std::size_t>> counts(paths, std::vector<std::size_t>(bins, 0));
    numerics::parallel_for(paths, workers, [&](std::size_t p) {
        numerics::RngStream stream(seed, stream_offset + p);
        const std::vector<double> path = simulate(stream, length);
        for (std::size_t i = 1; i < path.size(); ++i) {
            const std::size_t b = bin_of(path[i - 1]);
            sums[p][b] += path[i];
            ++counts[p][b];
        }
    });

    const double marginal_mean = core::pfd_mean_var(law).mean;
    std::vector<double> predictor(bins, marginal_mean);
    for (std::size_t b = 0; b < bins; ++b) {
        double s = 0.0;
        std::size_t c = 0;
        for (std::size_t p = 0; p < paths; ++p) {
            s += sums[p][b];
            c += counts[p][b];
        }
        if (c > 0) {
            predictor[b] = s / static_cast<double>(c);
        }
    }

    double sse = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        const double r = x[i] - predictor[bin_of(x[i - 1])];
        sse += r * r;
    }
    return sse / static_cast<double>(x.size() - 1);
}

ModelComparison analyze(const TimeSeries& series, const AnalyzeOptions& options) {
    const std::size_t m = series.values.size();
    if (m < 3) {
        throw DomainError("series needs at least 3 values, got " + std::to_string(m));
    }
    if (options.predictor_paths < 1) {
        throw DomainError("predictor_paths must be at least 1");
    }
    const std::vector<double> u = core::ecdf_transform(series.values);

    ModelComparison out;
    out.options = options;
    out.predictor_length = std::max(m, kMinPredictorLength);
    out.stats = estimation::compute_stats(u);
    try {
        out.sample_lag1_corr = processes::empirical_autocorr(u, 1);
    } catch (const DegenerateVarianceError&) {
        out.sample_lag1_corr = std::nullopt;
    }

    estimation::MomentStats kstats = out.stats;
    out.kundu.degenerate_corrected = correct_proportion(kstats.ascent, m);
    out.kundu.estimate = estimation::fit_kundu_mom(kstats);
    const double ka = out.kundu.estimate.alpha;
    const double kb = out.kundu.estimate.beta;
    out.kundu.model_corr = processes::kundu_lag_corr(ka, kb, 1);

    estimation::MomentStats mstats = out.stats;
    out.maxar.degenerate_corrected = correct_proportion(mstats.descent, m);
    out.maxar.estimate = estimation::fit_maxar_mom(mstats);
    const double ma = out.maxar.estimate.alpha;
    const double md = out.maxar.estimate.delta;
    const bool independent = out.maxar.estimate.boundary ||
                             md >= ma * (1.0 - processes::MaxArParams::kMinRelativeGap);
    out.maxar.model_corr = independent ? 0.0 : processes::maxar_lag1_corr({ma, md});

    const PathSimulator kundu_sim = [ka, kb](numerics::RngStream& s, std::size_t n) {
        return processes::simulate_kundu(processes::KunduOrderParams({ka, kb}), n, s).values;
    };
    const PathSimulator maxar_sim = [ma, md, independent](numerics::RngStream& s, std::size_t n) {
        if (independent) {
            const core::PfdLaw law(ma);
            std::vector<double> v(n);
            for (auto& x : v) {
                x = core::sample_pfd(law, s);
            }
            return v;
        }
        return processes::simulate_maxar({ma, md}, n, s).values;
    };

    const std::size_t paths = options.predictor_paths;
    out.mse_kundu = predictive_mse(u, kundu_sim, ka + kb, paths, out.predictor_length,
                                   options.bins, options.master_seed, 0, options.workers);
    out.mse_maxar = predictive_mse(u, maxar_sim, ma, paths, out.predictor_length, options.bins,
                                   options.master_seed, paths, options.workers);
    out.winner = out.mse_kundu < out.mse_maxar ? processes::ModelTag::kundu
                                               : processes::ModelTag::maxar;
    return out;
}

nlohmann::ordered_json report(const ModelComparison& c) {
    using nlohmann::ordered_json;
    const auto& k = c.kundu.estimate;
    const auto& x = c.maxar.estimate;
    ordered_json j;
    j["schema_version"] = 1;
    j["kind"] = "model_comparison";
    j["generator"] = numerics::kGeneratorName;
    j["config"] = {
        {"predictor_paths", c.options.predictor_paths},
        {"predictor_length", c.predictor_length},
        {"bins", c.options.bins},
        {"master_seed", c.options.master_seed},
    };
    j["sample"] = {
        {"m", c.stats.m},
        {"mean", c.stats.mean},
        {"ascent", c.stats.ascent},
        {"descent", c.stats.descent},
        {"tie", c.stats.tie},
        {"lag1_corr", number_or_null(c.sample_lag1_corr)},
    };
    j["kundu"] = {
        {"alpha", k.alpha},
        {"beta", k.beta},
        {"branch", estimation::to_string(k.branch)},
        {"ordering_mismatch", k.ordering_mismatch},
        {"degenerate_corrected", c.kundu.degenerate_corrected},
        {"model_corr", c.kundu.model_corr},
        {"mse", c.mse_kundu},
    };
    j["maxar"] = {
        {"alpha", x.alpha},
        {"delta", x.delta},
        {"boundary", x.boundary},
        {"degenerate_corrected", c.maxar.degenerate_corrected},
        {"model_corr", c.maxar.model_corr},
        {"mse", c.mse_maxar},
    };
    j["winner"] = processes::to_string(c.winner);
    return j;
}

}  // namespace pfdp::pipeline
