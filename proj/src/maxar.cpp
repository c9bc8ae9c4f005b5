#include "pfdp/processes/maxar.hpp"

#include <algorithm>
#include <cmath>

#include "pfdp/core/pfd.hpp"
#include "pfdp/errors.hpp"

namespace pfdp::processes {

MaxArStart MaxArStart::fixed(double x0) {
    if (!(x0 > 0.0 && x0 < 1.0)) {
        throw DomainError("max-AR start value must lie in (0,1)");
    }
    return MaxArStart(x0);
}

SamplePath simulate_maxar(const MaxArParams& params, std::size_t n, numerics::RngStream& stream,
                          MaxArStart start) {
    if (n < 1) {
        throw DomainError("simulate_maxar: n must be at least 1");
    }
    const double carry = params.carry_exponent();
    const double inv_delta = 1.0 / params.delta();

    SamplePath path;
    path.values.resize(n);
    if (start.is_stationary()) {
        path.values[0] = core::clamp_open_unit(std::pow(stream.uniform(), 1.0 / params.alpha()));
    } else {
        path.values[0] = *start.value();
        path.fixed_start = start.value();
    }
    for (std::size_t i = 1; i < n; ++i) {
        const double innovation = std::pow(stream.uniform(), inv_delta);
        path.values[i] =
            core::clamp_open_unit(std::max(std::pow(path.values[i - 1], carry), innovation));
    }
    path.model_tag = ModelTag::maxar;
    path.seed = StreamSeed{stream.master_seed(), stream.stream_id()};
    path.params = params;
    return path;
}

double maxar_joint_cdf(const MaxArParams& params, double x0, double x1) {
    if (!(x0 >= 0.0 && x0 <= 1.0 && x1 >= 0.0 && x1 <= 1.0)) {
        throw DomainError("maxar_joint_cdf: arguments must lie in [0,1]");
    }
    const double a = params.alpha();
    const double d = params.delta();
    return std::pow(x1, d) * std::min(std::pow(x0, a), std::pow(x1, a - d));
}

double maxar_cross_moment(const MaxArParams& params) {
    const double a = params.alpha();
    const double d = params.delta();
    // E(U0^{1/a} U0^{1/(a-d)} ; U1 < U0^{d/(a-d)}) = 1 / (1/a + (1+d)/(a-d) + 1)
    const double k = 1.0 / (1.0 / a + (1.0 + d) / (a - d) + 1.0);
    return d / (d + 1.0) * (a / (a + 1.0) - k) + k;
}

double maxar_lag1_corr(const MaxArParams& params) {
    const auto [mean, variance] = core::pfd_mean_var(core::PfdLaw(params.alpha()));
    return (maxar_cross_moment(params) - mean * mean) / variance;
}

double maxar_descent_prob(const MaxArParams& params) {
    return params.alpha() / (params.alpha() + params.delta());
}

SamplePath simulate_maxar_higher(const HigherMaxArParams& params, std::size_t n,
                                 numerics::RngStream& stream) {
    if (n < 1) {
        throw DomainError("simulate_maxar_higher: n must be at least 1");
    }
    const auto& inner = params.inner_exponents();  // (d_k, ..., d_1)
    const std::size_t k = params.order();
    const double inv_delta = 1.0 / params.innovation_exponent();

    SamplePath path;
    path.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i < k) {
            path.values[i] = params.start_values()[i];
            continue;
        }
        double x = std::pow(stream.uniform(), inv_delta);
        for (std::size_t j = 0; j < k; ++j) {
            x = std::max(x, std::pow(path.values[i - k + j], inner[j]));
        }
        path.values[i] = core::clamp_open_unit(x);
    }
    path.model_tag = ModelTag::maxar_higher;
    path.seed = StreamSeed{stream.master_seed(), stream.stream_id()};
    path.params = params;
    return path;
}

}  // namespace pfdp::processes
