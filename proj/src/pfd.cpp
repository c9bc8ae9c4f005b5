#include "pfdp/core/pfd.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "pfdp/errors.hpp"

namespace pfdp::core {

PfdLaw::PfdLaw(double alpha) : alpha_(alpha) {
    if (!std::isfinite(alpha) || !(alpha > 0.0)) {
        throw DomainError("PFD shape must be finite and positive, got " + std::to_string(alpha));
    }
}

double pfd_cdf(const PfdLaw& law, double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError("pfd_cdf: x must lie in [0,1]");
    }
    return std::pow(x, law.alpha());
}

double pfd_pdf(const PfdLaw& law, double x) {
    if (!(x > 0.0 && x < 1.0)) {
        throw DomainError("pfd_pdf: x must lie in (0,1)");
    }
    return law.alpha() * std::pow(x, law.alpha() - 1.0);
}

double pfd_quantile(const PfdLaw& law, double u) {
    if (!(u >= 0.0 && u <= 1.0)) {
        throw DomainError("pfd_quantile: u must lie in [0,1]");
    }
    return std::pow(u, 1.0 / law.alpha());
}

MeanVar pfd_mean_var(const PfdLaw& law) noexcept {
    const double a = law.alpha();
    return {a / (a + 1.0), a / ((a + 1.0) * (a + 1.0) * (a + 2.0))};
}

double sample_pfd(const PfdLaw& law, numerics::RngStream& rng) {
    return clamp_open_unit(std::pow(rng.uniform(), 1.0 / law.alpha()));
}

double pareto_reciprocal(double x) {
    if (!(x > 0.0 && x <= 1.0)) {
        throw DomainError("pareto_reciprocal: x must lie in (0,1]");
    }
    return 1.0 / x;
}

double clamp_open_unit(double x) noexcept {
    constexpr double lo = std::numeric_limits<double>::denorm_min();
    constexpr double hi = 1.0 - 0x1.0p-53;
    return x < lo ? lo : (x > hi ? hi : x);
}

}  // namespace pfdp::core
