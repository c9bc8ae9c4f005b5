#include "pfdp/estimation/moments.hpp"

#include <numeric>

#include "pfdp/errors.hpp"

namespace pfdp::estimation {
namespace {

double shape_sum(double mean) {
    if (!(mean > 0.0 && mean < 1.0)) {
        throw InfeasibleStatsError("sample mean must lie in (0,1) for a PFD fit");
    }
    return mean / (1.0 - mean);
}

}  // namespace

MomentStats compute_stats(std::span<const double> path) {
    const std::size_t m = path.size();
    if (m < 2) {
        throw DomainError("compute_stats: need at least 2 observations");
    }
    std::size_t up = 0;
    std::size_t down = 0;
    for (std::size_t i = 1; i < m; ++i) {
        if (path[i - 1] < path[i]) {
            ++up;
        } else if (path[i] < path[i - 1]) {
            ++down;
        }
    }
    const auto transitions = static_cast<double>(m - 1);
    MomentStats s;
    s.mean = std::accumulate(path.begin(), path.end(), 0.0) / static_cast<double>(m);
    s.ascent = static_cast<double>(up) / transitions;
    s.descent = static_cast<double>(down) / transitions;
    s.tie = static_cast<double>(m - 1 - up - down) / transitions;
    s.m = m;
    return s;
}

std::string_view to_string(KunduBranch branch) noexcept {
    switch (branch) {
        case KunduBranch::alpha_gt_beta:
            return "alpha_gt_beta";
        case KunduBranch::alpha_lt_beta:
            return "alpha_lt_beta";
        case KunduBranch::boundary:
            return "boundary";
    }
    return "boundary";
}

KunduEstimate fit_kundu_mom(const MomentStats& stats) {
    const double s = shape_sum(stats.mean);
    const double a = stats.ascent;
    if (a <= 0.0 || a >= 1.0) {
        throw DegenerateStatsError("ascent proportion is 0 or 1; Kundu moments have no solution");
    }
    KunduEstimate e;
    if (a < 0.5) {
        e.branch = KunduBranch::alpha_gt_beta;
        e.alpha = a * s / (1.0 - a);
        e.beta = e.alpha * (1.0 - 2.0 * a) / a;
        e.ordering_mismatch = 3.0 * a < 1.0;
    } else if (a > 0.5) {
        e.branch = KunduBranch::alpha_lt_beta;
        e.alpha = s * (2.0 * a - 1.0) / a;
        e.beta = e.alpha * (1.0 - a) / (2.0 * a - 1.0);
        e.ordering_mismatch = 3.0 * a > 2.0;
    } else {
        e.branch = KunduBranch::boundary;
        e.alpha = e.beta = s / 2.0;
    }
    return e;
}

MaxArEstimate fit_maxar_mom(const MomentStats& stats) {
    const double alpha = shape_sum(stats.mean);
    const double d = stats.descent;
    if (d <= 0.0 || d >= 1.0) {
        throw DegenerateStatsError("descent proportion is 0 or 1; max-AR moments have no solution");
    }
    MaxArEstimate e;
    e.alpha = alpha;
    if (d > 0.5) {
        e.delta = alpha * (1.0 - d) / d;
    } else {
        e.delta = alpha;
        e.boundary = true;
    }
    return e;
}

}  // namespace pfdp::estimation
