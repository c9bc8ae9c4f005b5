#pragma once

#include "pfdp/numerics/rng.hpp"

namespace pfdp::core {

/// Power function distribution on [0,1] with CDF x^alpha. alpha = 1 is uniform.
class PfdLaw {
public:
    /// Throws DomainError unless alpha is finite and positive.
    explicit PfdLaw(double alpha);

    [[nodiscard]] double alpha() const noexcept { return alpha_; }

    friend bool operator==(const PfdLaw&, const PfdLaw&) = default;

private:
    double alpha_;
};

struct MeanVar {
    double mean = 0.0;
    double variance = 0.0;
};

/// x^alpha; throws DomainError outside [0,1].
[[nodiscard]] double pfd_cdf(const PfdLaw& law, double x);

/// alpha x^(alpha-1); throws DomainError outside (0,1).
[[nodiscard]] double pfd_pdf(const PfdLaw& law, double x);

/// u^(1/alpha); throws DomainError outside [0,1].
[[nodiscard]] double pfd_quantile(const PfdLaw& law, double u);

/// mean alpha/(alpha+1), variance alpha/((alpha+1)^2 (alpha+2)).
[[nodiscard]] MeanVar pfd_mean_var(const PfdLaw& law) noexcept;

/// One inversion draw; consumes exactly one uniform.
[[nodiscard]] double sample_pfd(const PfdLaw& law, numerics::RngStream& rng);

/// 1/x. Maps PFD(alpha) onto Pareto(alpha, 1). Throws DomainError unless 0 < x <= 1.
[[nodiscard]] double pareto_reciprocal(double x);

/// Clamp into the open unit interval. Powers of uniforms close to 1 (or tiny
/// ones raised to large exponents) can round onto the boundary.
[[nodiscard]] double clamp_open_unit(double x) noexcept;

}  // namespace pfdp::core
