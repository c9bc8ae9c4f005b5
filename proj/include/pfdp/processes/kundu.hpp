#pragma once

#include <cstddef>

#include "pfdp/core/pfd.hpp"
#include "pfdp/numerics/rng.hpp"
#include "pfdp/processes/params.hpp"
#include "pfdp/processes/sample_path.hpp"

namespace pfdp::processes {

/**
 * Stationary path of length n of the order-k moving-maximum process.
 *
 * Draws n + k uniforms in order. Forward: the first k are the pre-period
 * U_{-k}..U_{-1}, so X_0 already has the stationary law. Reverse: the last k
 * are the look-ahead U_n..U_{n+k-1}.
 */
[[nodiscard]] SamplePath simulate_kundu(const KunduOrderParams& params, std::size_t n,
                                        numerics::RngStream& stream);

/// PFD(sum of exponents), for either direction.
[[nodiscard]] core::PfdLaw kundu_marginal(const KunduOrderParams& params);

[[nodiscard]] core::MeanVar kundu_mean_var(const KunduOrderParams& params);

/**
 * P(X_{n-1} <= x_prev, X_n <= x_cur) for the forward exponents (a_0..a_k):
 *
 *   x_cur^{a_0} x_prev^{a_k} prod_{i<k} min(x_prev^{a_i}, x_cur^{a_{i+1}})
 *
 * U_{n-1-i} enters X_{n-1} with exponent a_i and X_n with a_{i+1}. Throws
 * DomainError outside the unit square.
 */
[[nodiscard]] double kundu_joint_cdf_lag1(const KunduOrderParams& params, double x_prev,
                                          double x_cur);

/// The four pieces of E(X_n X_{n-1}) for X_n = max(U_n^{1/a}, U_{n-1}^{1/b}),
/// split on which uniform attains each maximum. With U = U_n, V = U_{n-1},
/// W = U_{n-2}:
///   a: X_n = V^{1/b}, X_{n-1} = W^{1/b}      b: X_n = V^{1/b}, X_{n-1} = V^{1/a}
///   c: X_n = U^{1/a}, X_{n-1} = W^{1/b}      d: X_n = U^{1/a}, X_{n-1} = V^{1/a}
struct KunduCrossMomentTerms {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;

    [[nodiscard]] double total() const noexcept { return a + b + c + d; }
};

[[nodiscard]] KunduCrossMomentTerms kundu_cross_moment_terms(double alpha, double beta);

/// E(X_n X_{n-1}) for the order-1 process; symmetric in (alpha, beta).
[[nodiscard]] double kundu_cross_moment(double alpha, double beta);

/// Order-1 autocorrelation: 1 at lag 0, closed form at lag 1, exactly 0 beyond.
[[nodiscard]] double kundu_lag_corr(double alpha, double beta, std::size_t lag);

struct OrderProbabilities {
    double less = 0.0;     // P(X_1 < X_2)
    double greater = 0.0;  // P(X_1 > X_2)
    double tie = 0.0;      // P(X_1 = X_2)
};

/// Transition-order law of the order-1 process. Ties have mass 1/3 when
/// alpha == beta (U_1 is then the largest of three uniforms) and 0 otherwise.
[[nodiscard]] OrderProbabilities kundu_order_probs(double alpha, double beta);

}  // namespace pfdp::processes
