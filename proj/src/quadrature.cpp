#include "pfdp/numerics/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "pfdp/errors.hpp"

namespace pfdp::numerics {
namespace {

using Rule = boost::math::quadrature::tanh_sinh<double>;

using Panel = boost::math::quadrature::gauss_kronrod<double, 15>;

constexpr std::size_t kMaxRefinements = 15;
// Below this width tanh-sinh abscissas collapse; one Kronrod panel is exact enough.
constexpr double kNarrowPiece = 1e-6;

struct BudgetExceeded {};

}  // namespace

QuadratureResult quad2d(const Integrand2D& f, std::optional<BreakpointCurve> breakpoint,
                        const QuadratureOptions& options) {
    if (!(options.tol > 0.0)) {
        throw DomainError("quad2d: tolerance must be positive");
    }
    const double rel_tol = options.tol / 10.0;
    Rule rule(kMaxRefinements);

    std::size_t evaluations = 0;
    double worst_inner_error = 0.0;

    auto inner = [&](double outer) {
        auto g = [&](double y) {
            if (++evaluations > options.max_evaluations) {
                throw BudgetExceeded{};
            }
            return f(outer, y);
        };
        double total = 0.0;
        double total_error = 0.0;
        auto piece = [&](double lo, double hi) {
            if (!(hi > lo)) {
                return;
            }
            double err = 0.0;
            if (hi - lo < kNarrowPiece) {
                total += Panel::integrate(g, lo, hi, 0, 0.0, &err);
                // a single panel reports |K - G| on [-1, 1], unscaled
                err *= (hi - lo) / 2.0;
            } else {
                total += rule.integrate(g, lo, hi, rel_tol, &err);
            }
            total_error += err;
        };
        if (breakpoint) {
            const double cut = std::clamp(std::pow(outer, breakpoint->exponent), 0.0, 1.0);
            piece(0.0, cut);
            piece(cut, 1.0);
        } else {
            piece(0.0, 1.0);
        }
        worst_inner_error = std::max(worst_inner_error, total_error);
        return total;
    };

    QuadratureResult result;
    double outer_error = 0.0;
    try {
        result.value = rule.integrate(inner, 0.0, 1.0, rel_tol, &outer_error);
    } catch (const BudgetExceeded&) {
        throw NonConvergenceError("quad2d: evaluation budget of " +
                                  std::to_string(options.max_evaluations) + " exhausted");
    }
    result.est_error = outer_error + worst_inner_error;
    result.evaluations = evaluations;
    if (!std::isfinite(result.value)) {
        throw NonConvergenceError("quad2d: integral is not finite");
    }
    if (result.est_error > options.tol) {
        throw NonConvergenceError("quad2d: estimated error " + std::to_string(result.est_error) +
                                  " exceeds tolerance " + std::to_string(options.tol));
    }
    return result;
}

}  // namespace pfdp::numerics
