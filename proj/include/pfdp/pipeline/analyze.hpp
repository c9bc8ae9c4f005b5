#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "pfdp/estimation/moments.hpp"
#include "pfdp/numerics/rng.hpp"
#include "pfdp/pipeline/series.hpp"
#include "pfdp/processes/sample_path.hpp"

namespace pfdp::pipeline {

struct AnalyzeOptions {
    std::size_t predictor_paths = 200;
    std::size_t bins = 20;
    std::uint64_t master_seed = 0;
    unsigned workers = 1;
};

struct KunduFit {
    estimation::KunduEstimate estimate;
    double model_corr = 0.0;
    /// the ascent proportion was 0 or 1 and was pulled in by half a transition
    bool degenerate_corrected = false;
};

struct MaxArFit {
    estimation::MaxArEstimate estimate;
    double model_corr = 0.0;
    bool degenerate_corrected = false;
};

struct ModelComparison {
    estimation::MomentStats stats;               // of the rank-transformed series
    std::optional<double> sample_lag1_corr;      // absent for a constant series
    KunduFit kundu;
    MaxArFit maxar;
    double mse_kundu = 0.0;
    double mse_maxar = 0.0;
    processes::ModelTag winner = processes::ModelTag::maxar;
    AnalyzeOptions options;
    std::size_t predictor_length = 0;
};

/**
 * One-step-ahead predictive mean squared error of a fitted model on x.
 *
 * `simulate(stream, length)` draws a stationary path of the model. Pairs
 * (X_{n-1}, X_n) from `paths` such paths estimate E[X_n | X_{n-1} in bin] on
 * `bins` bins that are equiprobable under PFD(shape); each x_i is predicted by
 * the mean of its predecessor's bin. Path p uses stream (seed, stream_offset + p).
 */
using PathSimulator = std::function<std::vector<double>(numerics::RngStream&, std::size_t)>;

[[nodiscard]] double predictive_mse(std::span<const double> x, const PathSimulator& simulate,
                                    double shape, std::size_t paths, std::size_t length,
                                    std::size_t bins, std::uint64_t seed,
                                    std::uint64_t stream_offset, unsigned workers);

/**
 * Rank-transform the series to (0,1), fit both processes by moments, and
 * compare them by predictive MSE (see predictive_mse). Predictor paths have
 * length max(m, 500); the Kundu fit uses streams 0..P-1 and the max-AR fit
 * P..2P-1. The smaller MSE wins; an exact tie goes to max-AR.
 *
 * A boundary max-AR fit (delta = alpha) is simulated as its independence
 * limit, i.i.d. PFD(alpha), with model correlation 0.
 */
[[nodiscard]] ModelComparison analyze(const TimeSeries& series, const AnalyzeOptions& options);

/// Versioned JSON document with sample, kundu, maxar and winner blocks.
[[nodiscard]] nlohmann::ordered_json report(const ModelComparison& comparison);

}  // namespace pfdp::pipeline
