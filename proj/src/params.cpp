#include "pfdp/processes/params.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pfdp/errors.hpp"

namespace pfdp::processes {
namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

KunduOrderParams::KunduOrderParams(std::vector<double> alphas, Direction direction)
    : alphas_(std::move(alphas)), direction_(direction) {
    if (alphas_.empty()) {
        throw DomainError("Kundu process needs at least one exponent");
    }
    if (!std::all_of(alphas_.begin(), alphas_.end(), positive_finite)) {
        throw DomainError("Kundu exponents must be finite and positive");
    }
}

double KunduOrderParams::total_shape() const noexcept {
    return std::accumulate(alphas_.begin(), alphas_.end(), 0.0);
}

std::vector<double> KunduOrderParams::forward_alphas() const {
    if (direction_ == Direction::forward) {
        return alphas_;
    }
    return {alphas_.rbegin(), alphas_.rend()};
}

MaxArParams::MaxArParams(double alpha, double delta) : alpha_(alpha), delta_(delta) {
    if (!positive_finite(alpha) || !positive_finite(delta)) {
        throw DomainError("max-AR parameters must be finite and positive");
    }
    if (!(delta < alpha)) {
        throw DomainError("max-AR requires delta < alpha (got alpha=" + std::to_string(alpha) +
                          ", delta=" + std::to_string(delta) + ")");
    }
    if ((alpha - delta) / alpha < kMinRelativeGap) {
        throw DomainError("max-AR delta too close to alpha: carried exponent overflows");
    }
}

HigherMaxArParams::HigherMaxArParams(std::vector<double> inner_exponents,
                                     double innovation_exponent,
                                     std::vector<double> start_values)
    : inner_(std::move(inner_exponents)),
      innovation_(innovation_exponent),
      starts_(std::move(start_values)) {
    if (inner_.empty()) {
        throw DomainError("higher-order max-AR needs at least one lag exponent");
    }
    if (!std::all_of(inner_.begin(), inner_.end(), positive_finite) ||
        !positive_finite(innovation_)) {
        throw DomainError("higher-order max-AR exponents must be finite and positive");
    }
    if (starts_.size() != inner_.size()) {
        throw DomainError("higher-order max-AR needs one start value per lag");
    }
    if (!std::all_of(starts_.begin(), starts_.end(), [](double v) { return v > 0.0 && v < 1.0; })) {
        throw DomainError("higher-order max-AR start values must lie in (0,1)");
    }
}

}  // namespace pfdp::processes
