#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace pfdp::numerics {

struct QuadratureResult {
    double value = 0.0;
    double est_error = 0.0;
    std::size_t evaluations = 0;
};

/// Curve inner = outer^exponent across which the integrand has a kink or jump.
struct BreakpointCurve {
    double exponent = 1.0;
};

struct QuadratureOptions {
    double tol = 1e-8;
    std::size_t max_evaluations = 10'000'000;
};

using Integrand2D = std::function<double(double outer, double inner)>;

/**
 * Integral of f over the open unit square, iterated as an outer integral over
 * the first argument of an inner integral over the second.
 *
 * When a breakpoint curve is supplied the inner integral is split at
 * inner = outer^exponent, so each piece is smooth. Both levels use
 * tanh-sinh quadrature, which never samples the interval endpoints and
 * converges quickly despite power singularities at them.
 *
 * est_error is the outer error estimate plus the worst inner estimate (the
 * inner integral of an error bounded pointwise by e is at most e on a unit
 * interval). Throws NonConvergenceError when est_error exceeds tol or the
 * evaluation budget is exhausted.
 */
[[nodiscard]] QuadratureResult quad2d(const Integrand2D& f,
                                      std::optional<BreakpointCurve> breakpoint = std::nullopt,
                                      const QuadratureOptions& options = {});

}  // namespace pfdp::numerics
