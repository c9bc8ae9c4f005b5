#include "pfdp/estimation/study.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "pfdp/errors.hpp"
#include "pfdp/estimation/moments.hpp"
#include "pfdp/numerics/monte_carlo.hpp"
#include "pfdp/numerics/rng.hpp"
#include "pfdp/processes/kundu.hpp"
#include "pfdp/processes/maxar.hpp"
#include "pfdp/processes/sample_path.hpp"

namespace pfdp::estimation {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double quantile_sorted(const std::vector<double>& sorted, double p) {
    const double h = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

EstimateSummary summarize(std::string name, double truth, std::vector<double> values,
                          std::size_t bins) {
    EstimateSummary s;
    s.parameter = std::move(name);
    s.truth = truth;
    s.count = values.size();
    s.histogram_counts.assign(bins, 0);
    if (values.empty()) {
        s.mean = s.sd = s.bias = s.histogram_lo = s.histogram_hi = kNaN;
        s.deciles.fill(kNaN);
        return s;
    }
    // summation in replicate order keeps the result independent of scheduling
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    s.mean = sum / static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values) {
        ss += (v - s.mean) * (v - s.mean);
    }
    s.sd = values.size() > 1 ? std::sqrt(ss / static_cast<double>(values.size() - 1)) : 0.0;
    s.bias = s.mean - truth;

    std::sort(values.begin(), values.end());
    for (std::size_t i = 0; i < s.deciles.size(); ++i) {
        s.deciles[i] = quantile_sorted(values, static_cast<double>(i) / 10.0);
    }
    s.histogram_lo = values.front();
    s.histogram_hi = values.back();
    const double width = (s.histogram_hi - s.histogram_lo) / static_cast<double>(bins);
    for (double v : values) {
        std::size_t b = 0;
        if (width > 0.0) {
            b = std::min(bins - 1, static_cast<std::size_t>((v - s.histogram_lo) / width));
        }
        ++s.histogram_counts[b];
    }
    return s;
}

ReplicateRow run_replicate(const StudyConfig& config, std::size_t size, std::size_t replicate) {
    ReplicateRow row;
    row.size = size;
    row.replicate = replicate;
    row.estimates = {kNaN, kNaN};

    numerics::RngStream stream(config.master_seed, replicate);
    const auto [p1, p2] = config.true_params;
    const processes::SamplePath path =
        config.model == StudyModel::kundu
            ? processes::simulate_kundu(processes::KunduOrderParams({p1, p2}), size, stream)
            : processes::simulate_maxar(processes::MaxArParams(p1, p2), size, stream);
    const MomentStats stats = compute_stats(path.values);
    try {
        if (config.model == StudyModel::kundu) {
            const auto e = fit_kundu_mom(stats);
            row.estimates = {e.alpha, e.beta};
            row.boundary = e.branch == KunduBranch::boundary;
            row.ordering_mismatch = e.ordering_mismatch;
        } else {
            const auto e = fit_maxar_mom(stats);
            row.estimates = {e.alpha, e.delta};
            row.boundary = e.boundary;
        }
    } catch (const DegenerateStatsError&) {
        row.status = ReplicateStatus::degenerate;
    } catch (const InfeasibleStatsError&) {
        row.status = ReplicateStatus::infeasible;
    }
    return row;
}

std::string_view to_string(ReplicateStatus s) {
    switch (s) {
        case ReplicateStatus::ok:
            return "ok";
        case ReplicateStatus::degenerate:
            return "degenerate";
        case ReplicateStatus::infeasible:
            return "infeasible";
    }
    return "ok";
}

nlohmann::ordered_json number_or_null(double v) {
    if (std::isfinite(v)) {
        return v;
    }
    return nullptr;
}

}  // namespace

std::string_view to_string(StudyModel model) noexcept {
    return model == StudyModel::kundu ? "kundu" : "maxar";
}

void StudyConfig::validate() const {
    if (model == StudyModel::kundu) {
        (void)processes::KunduOrderParams({true_params[0], true_params[1]});
    } else {
        (void)processes::MaxArParams(true_params[0], true_params[1]);
    }
    if (replicates < 2) {
        throw DomainError("study needs at least 2 replicates");
    }
    if (path_sizes.empty()) {
        throw DomainError("study needs at least one path size");
    }
    for (auto m : path_sizes) {
        if (m < 3) {
            throw DomainError("study path sizes must be at least 3");
        }
    }
    if (histogram_bins < 1) {
        throw DomainError("study needs at least one histogram bin");
    }
}

std::array<std::string, 2> StudyConfig::parameter_names() const {
    if (model == StudyModel::kundu) {
        return {"alpha", "beta"};
    }
    return {"alpha", "delta"};
}

StudyReport run_study(const StudyConfig& config, unsigned workers) {
    config.validate();
    const std::size_t n_sizes = config.path_sizes.size();
    const std::size_t reps = config.replicates;

    StudyReport report;
    report.config = config;
    report.rows.resize(n_sizes * reps);
    numerics::parallel_for(report.rows.size(), workers, [&](std::size_t task) {
        const std::size_t size = config.path_sizes[task / reps];
        report.rows[task] = run_replicate(config, size, task % reps);
    });

    const auto names = config.parameter_names();
    for (std::size_t si = 0; si < n_sizes; ++si) {
        SizeSummary summary;
        summary.size = config.path_sizes[si];
        std::array<std::vector<double>, 2> values;
        for (std::size_t r = 0; r < reps; ++r) {
            const ReplicateRow& row = report.rows[si * reps + r];
            switch (row.status) {
                case ReplicateStatus::degenerate:
                    ++summary.degenerate_failures;
                    continue;
                case ReplicateStatus::infeasible:
                    ++summary.infeasible_failures;
                    continue;
                case ReplicateStatus::ok:
                    break;
            }
            summary.boundary_fits += row.boundary ? 1 : 0;
            summary.ordering_mismatches += row.ordering_mismatch ? 1 : 0;
            values[0].push_back(row.estimates[0]);
            values[1].push_back(row.estimates[1]);
        }
        for (std::size_t p = 0; p < 2; ++p) {
            summary.estimates[p] = summarize(names[p], config.true_params[p], std::move(values[p]),
                                             config.histogram_bins);
        }
        report.sizes.push_back(std::move(summary));
    }
    return report;
}

nlohmann::ordered_json to_json(const StudyReport& report) {
    using nlohmann::ordered_json;
    const auto& c = report.config;
    const auto names = c.parameter_names();

    ordered_json j;
    j["schema_version"] = 1;
    j["kind"] = "estimator_study";
    j["generator"] = numerics::kGeneratorName;
    j["config"] = {
        {"model", to_string(c.model)},
        {"true_params", {{names[0], c.true_params[0]}, {names[1], c.true_params[1]}}},
        {"path_sizes", c.path_sizes},
        {"replicates", c.replicates},
        {"master_seed", c.master_seed},
        {"histogram_bins", c.histogram_bins},
    };
    ordered_json sizes = ordered_json::array();
    for (const auto& s : report.sizes) {
        ordered_json entry{
            {"size", s.size},
            {"failures", {{"degenerate", s.degenerate_failures}, {"infeasible", s.infeasible_failures}}},
            {"boundary_fits", s.boundary_fits},
            {"ordering_mismatches", s.ordering_mismatches},
        };
        ordered_json estimates = ordered_json::object();
        for (const auto& e : s.estimates) {
            ordered_json deciles = ordered_json::array();
            for (double d : e.deciles) {
                deciles.push_back(number_or_null(d));
            }
            estimates[e.parameter] = {
                {"truth", e.truth},
                {"count", e.count},
                {"mean", number_or_null(e.mean)},
                {"sd", number_or_null(e.sd)},
                {"bias", number_or_null(e.bias)},
                {"deciles", deciles},
                {"histogram",
                 {{"lo", number_or_null(e.histogram_lo)},
                  {"hi", number_or_null(e.histogram_hi)},
                  {"counts", e.histogram_counts}}},
            };
        }
        entry["estimates"] = std::move(estimates);
        sizes.push_back(std::move(entry));
    }
    j["sizes"] = std::move(sizes);
    return j;
}

void write_csv(const StudyReport& report, std::ostream& out,
               const std::vector<std::string>& metadata) {
    const auto names = report.config.parameter_names();
    for (const auto& line : metadata) {
        out << "# " << line << '\n';
    }
    out << "size,replicate,status," << names[0] << ',' << names[1] << ",boundary,ordering_mismatch\n";
    for (const auto& row : report.rows) {
        out << row.size << ',' << row.replicate << ',' << to_string(row.status) << ',';
        if (row.status == ReplicateStatus::ok) {
            out << processes::format_full(row.estimates[0]) << ','
                << processes::format_full(row.estimates[1]);
        } else {
            out << ',';
        }
        out << ',' << (row.boundary ? 1 : 0) << ',' << (row.ordering_mismatch ? 1 : 0) << '\n';
    }
}

}  // namespace pfdp::estimation
