#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace pfdp::estimation {

/// Sample mean and transition-order proportions of a path.
///
/// Proportions are over the m-1 transitions. The Kundu fitter matches the
/// ascent proportion to P(X_1 < X_2); the max-AR fitter matches the descent
/// proportion to P(X_1 < X_0).
struct MomentStats {
    double mean = 0.0;
    double ascent = 0.0;   // #{X_{i-1} < X_i} / (m-1)
    double descent = 0.0;  // #{X_i < X_{i-1}} / (m-1)
    double tie = 0.0;
    std::size_t m = 0;
};

/// Requires m >= 2.
[[nodiscard]] MomentStats compute_stats(std::span<const double> path);

enum class KunduBranch {
    alpha_gt_beta,  // ascent < 1/2: P(X_1<X_2) = a/(2a+b)
    alpha_lt_beta,  // ascent > 1/2: P(X_1<X_2) = (a+b)/(2b+a)
    boundary,       // ascent == 1/2: alpha = beta = s/2 with s = mean/(1-mean)
};

[[nodiscard]] std::string_view to_string(KunduBranch branch) noexcept;

struct KunduEstimate {
    double alpha = 0.0;
    double beta = 0.0;
    KunduBranch branch = KunduBranch::alpha_gt_beta;
    /// The solution contradicts the ordering its branch assumes. Happens for
    /// ascent < 1/3, which no order-1 process produces.
    bool ordering_mismatch = false;
};

struct MaxArEstimate {
    double alpha = 0.0;
    double delta = 0.0;
    /// descent <= 1/2 has no solution with delta < alpha; delta is set to alpha.
    bool boundary = false;
};

/**
 * Method-of-moments fit of the order-1 Kundu process.
 *
 * With s = mean/(1-mean) and A the ascent proportion:
 *   A < 1/2:  alpha = A s/(1-A),        beta = alpha (1-2A)/A
 *   A > 1/2:  alpha = s (2A-1)/A,       beta = alpha (1-A)/(2A-1)
 *   A = 1/2:  alpha = beta = s/2 (flagged boundary)
 * Either way alpha + beta = s.
 *
 * Throws InfeasibleStatsError if mean is outside (0,1) and
 * DegenerateStatsError if A is 0 or 1.
 */
[[nodiscard]] KunduEstimate fit_kundu_mom(const MomentStats& stats);

/**
 * Method-of-moments fit of the max-AR process: alpha = mean/(1-mean),
 * delta = alpha (1-D)/D with D the descent proportion. D <= 1/2 yields the
 * flagged boundary delta = alpha.
 *
 * Throws InfeasibleStatsError if mean is outside (0,1) and
 * DegenerateStatsError if D is 0 or 1.
 */
[[nodiscard]] MaxArEstimate fit_maxar_mom(const MomentStats& stats);

}  // namespace pfdp::estimation
