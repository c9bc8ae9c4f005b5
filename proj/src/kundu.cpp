#include "pfdp/processes/kundu.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "pfdp/errors.hpp"

namespace pfdp::processes {
namespace {

void require_positive(double alpha, double beta) {
    if (!(std::isfinite(alpha) && alpha > 0.0 && std::isfinite(beta) && beta > 0.0)) {
        throw DomainError("Kundu exponents must be finite and positive");
    }
}

}  // namespace

SamplePath simulate_kundu(const KunduOrderParams& params, std::size_t n,
                          numerics::RngStream& stream) {
    if (n < 1) {
        throw DomainError("simulate_kundu: n must be at least 1");
    }
    const auto& alphas = params.alphas();
    const std::size_t k = params.order();
    std::vector<double> inv(alphas.size());
    std::transform(alphas.begin(), alphas.end(), inv.begin(), [](double a) { return 1.0 / a; });

    std::vector<double> u(n + k);
    for (auto& x : u) {
        x = stream.uniform();
    }

    SamplePath path;
    path.values.resize(n);
    const bool forward = params.direction() == Direction::forward;
    for (std::size_t i = 0; i < n; ++i) {
        double x = 0.0;
        for (std::size_t j = 0; j <= k; ++j) {
            const double base = forward ? u[i + k - j] : u[i + j];
            x = std::max(x, std::pow(base, inv[j]));
        }
        path.values[i] = core::clamp_open_unit(x);
    }
    path.model_tag = ModelTag::kundu;
    path.seed = StreamSeed{stream.master_seed(), stream.stream_id()};
    path.params = params;
    return path;
}

core::PfdLaw kundu_marginal(const KunduOrderParams& params) {
    return core::PfdLaw(params.total_shape());
}

core::MeanVar kundu_mean_var(const KunduOrderParams& params) {
    return core::pfd_mean_var(kundu_marginal(params));
}

double kundu_joint_cdf_lag1(const KunduOrderParams& params, double x_prev, double x_cur) {
    if (!(x_prev >= 0.0 && x_prev <= 1.0 && x_cur >= 0.0 && x_cur <= 1.0)) {
        throw DomainError("kundu_joint_cdf_lag1: arguments must lie in [0,1]");
    }
    const auto a = params.forward_alphas();
    const std::size_t k = a.size() - 1;
    double f = std::pow(x_cur, a[0]) * std::pow(x_prev, a[k]);
    for (std::size_t i = 0; i < k; ++i) {
        f *= std::min(std::pow(x_prev, a[i]), std::pow(x_cur, a[i + 1]));
    }
    return f;
}

KunduCrossMomentTerms kundu_cross_moment_terms(double alpha, double beta) {
    require_positive(alpha, beta);
    const double a = alpha;
    const double b = beta;
    const double s1 = a + b + 1.0;
    const double q = a * a + b * b + a * b + a + b;

    KunduCrossMomentTerms t;
    t.a = b * b / (b + 1.0) * (1.0 / s1 - a / q);
    t.b = a * b / q;
    t.c = a * b / ((a + 1.0) * (b + 1.0)) * (1.0 - b / s1 - a / s1 + a * b / q);
    // mirror image of the first term under time reversal (a <-> b)
    t.d = a * a / (a + 1.0) * (1.0 / s1 - b / q);
    return t;
}

double kundu_cross_moment(double alpha, double beta) {
    return kundu_cross_moment_terms(alpha, beta).total();
}

double kundu_lag_corr(double alpha, double beta, std::size_t lag) {
    require_positive(alpha, beta);
    if (lag == 0) {
        return 1.0;
    }
    if (lag >= 2) {
        return 0.0;
    }
    const auto [mean, variance] = core::pfd_mean_var(core::PfdLaw(alpha + beta));
    return (kundu_cross_moment(alpha, beta) - mean * mean) / variance;
}

OrderProbabilities kundu_order_probs(double alpha, double beta) {
    require_positive(alpha, beta);
    OrderProbabilities p;
    if (alpha > beta) {
        p.less = alpha / (2.0 * alpha + beta);
        p.greater = 1.0 - p.less;
    } else if (alpha < beta) {
        p.greater = beta / (2.0 * beta + alpha);
        p.less = 1.0 - p.greater;
    } else {
        p.less = p.greater = p.tie = 1.0 / 3.0;
    }
    return p;
}

}  // namespace pfdp::processes
