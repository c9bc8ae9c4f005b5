#pragma once

#include <cstddef>
#include <optional>

#include "pfdp/numerics/rng.hpp"
#include "pfdp/processes/params.hpp"
#include "pfdp/processes/sample_path.hpp"

namespace pfdp::processes {

/// Initial condition of the max-AR recursion.
class MaxArStart {
public:
    /// X_0 = U_0^{1/alpha}: every X_n is then PFD(alpha).
    static MaxArStart stationary() noexcept { return MaxArStart(std::nullopt); }
    /// X_0 = x0 in (0,1); no uniform is consumed for it.
    static MaxArStart fixed(double x0);

    [[nodiscard]] bool is_stationary() const noexcept { return !x0_.has_value(); }
    [[nodiscard]] std::optional<double> value() const noexcept { return x0_; }

private:
    explicit MaxArStart(std::optional<double> x0) noexcept : x0_(x0) {}
    std::optional<double> x0_;
};

/// X_0..X_{n-1} with X_i = max(X_{i-1}^{alpha/(alpha-delta)}, U_i^{1/delta}).
[[nodiscard]] SamplePath simulate_maxar(const MaxArParams& params, std::size_t n,
                                        numerics::RngStream& stream,
                                        MaxArStart start = MaxArStart::stationary());

/// P(X_0 <= x0, X_1 <= x1) = x1^delta min(x0^alpha, x1^(alpha-delta)).
[[nodiscard]] double maxar_joint_cdf(const MaxArParams& params, double x0, double x1);

/// E(X_0 X_1) under the stationary law.
[[nodiscard]] double maxar_cross_moment(const MaxArParams& params);

/// Lag-1 autocorrelation; decreasing in delta from 1 (delta -> 0) to 0 (delta -> alpha).
[[nodiscard]] double maxar_lag1_corr(const MaxArParams& params);

/// P(X_1 < X_0) = alpha/(alpha+delta). Transitions never tie.
[[nodiscard]] double maxar_descent_prob(const MaxArParams& params);

/// Exploratory higher-order recursion. Values stay in (0,1); no marginal law
/// is claimed. With one lag exponent alpha/(alpha-delta) and innovation delta
/// it reproduces simulate_maxar started at the same fixed value.
[[nodiscard]] SamplePath simulate_maxar_higher(const HigherMaxArParams& params, std::size_t n,
                                               numerics::RngStream& stream);

}  // namespace pfdp::processes
