#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace pfdp::estimation {

enum class StudyModel { kundu, maxar };

[[nodiscard]] std::string_view to_string(StudyModel model) noexcept;

/// Parametric replication: fresh paths are simulated from the true parameters
/// for every replicate and refitted by the matching moment estimator.
struct StudyConfig {
    StudyModel model = StudyModel::maxar;
    /// (alpha, beta) for kundu, (alpha, delta) for maxar
    std::array<double, 2> true_params{};
    std::vector<std::size_t> path_sizes{20, 30, 50, 100, 200, 500};
    std::size_t replicates = 2000;
    std::uint64_t master_seed = 0;
    std::size_t histogram_bins = 20;

    /// Throws DomainError on invalid parameters, replicates < 2 or a size < 3.
    void validate() const;
    [[nodiscard]] std::array<std::string, 2> parameter_names() const;
};

struct EstimateSummary {
    std::string parameter;
    double truth = 0.0;
    std::size_t count = 0;  // successful fits
    double mean = 0.0;
    double sd = 0.0;  // sample standard deviation (n-1)
    double bias = 0.0;
    std::array<double, 11> deciles{};  // 0%, 10%, ..., 100%, linear interpolation
    double histogram_lo = 0.0;
    double histogram_hi = 0.0;
    std::vector<std::size_t> histogram_counts;
};

struct SizeSummary {
    std::size_t size = 0;
    std::size_t degenerate_failures = 0;
    std::size_t infeasible_failures = 0;
    std::size_t boundary_fits = 0;
    std::size_t ordering_mismatches = 0;
    std::array<EstimateSummary, 2> estimates;
};

enum class ReplicateStatus { ok, degenerate, infeasible };

struct ReplicateRow {
    std::size_t size = 0;
    std::size_t replicate = 0;
    ReplicateStatus status = ReplicateStatus::ok;
    std::array<double, 2> estimates{};
    bool boundary = false;
    bool ordering_mismatch = false;
};

struct StudyReport {
    StudyConfig config;
    std::vector<SizeSummary> sizes;
    std::vector<ReplicateRow> rows;  // size-major, then replicate
};

/**
 * Runs the replicated estimator study. Replicate r uses stream
 * (master_seed, r) at every path size. Degenerate or infeasible moment
 * statistics are counted per size, never fatal. The report depends only on
 * the config, not on `workers`.
 */
[[nodiscard]] StudyReport run_study(const StudyConfig& config, unsigned workers = 1);

[[nodiscard]] nlohmann::ordered_json to_json(const StudyReport& report);

/// One row per replicate: size, replicate, status, both estimates, flags.
void write_csv(const StudyReport& report, std::ostream& out,
               const std::vector<std::string>& metadata = {});

}  // namespace pfdp::estimation
