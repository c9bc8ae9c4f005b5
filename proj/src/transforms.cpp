#include "pfdp/core/transforms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

#include "pfdp/errors.hpp"

namespace pfdp::core {
namespace {

constexpr std::array<std::pair<std::string_view, QuantileFamily>, 3> kFamilies{{
    {"power", QuantileFamily::power},
    {"exponential", QuantileFamily::exponential},
    {"pareto", QuantileFamily::pareto},
}};

}  // namespace

QuantileSpec::QuantileSpec(QuantileFamily family, double parameter)
    : family_(family), parameter_(parameter) {
    if (!std::isfinite(parameter) || !(parameter > 0.0)) {
        throw DomainError("quantile family parameter must be finite and positive");
    }
}

QuantileSpec QuantileSpec::from_name(std::string_view name, double parameter) {
    for (const auto& [key, family] : kFamilies) {
        if (key == name) {
            return {family, parameter};
        }
    }
    throw DomainError("unknown quantile family '" + std::string(name) + "'");
}

std::string QuantileSpec::name() const {
    for (const auto& [key, family] : kFamilies) {
        if (family == family_) {
            return std::string(key);
        }
    }
    return "unknown";
}

double QuantileSpec::quantile(double u) const {
    if (!(u >= 0.0 && u <= 1.0)) {
        throw DomainError("quantile: u must lie in [0,1]");
    }
    switch (family_) {
        case QuantileFamily::power:
            return std::pow(u, 1.0 / parameter_);
        case QuantileFamily::exponential:
            if (u == 1.0) {
                throw DomainError("exponential quantile diverges at u = 1");
            }
            return -std::log1p(-u) / parameter_;
        case QuantileFamily::pareto:
            if (u == 1.0) {
                throw DomainError("pareto quantile diverges at u = 1");
            }
            return std::pow(1.0 - u, -1.0 / parameter_);
    }
    return 0.0;
}

double QuantileSpec::cdf(double y) const {
    switch (family_) {
        case QuantileFamily::power:
            return y <= 0.0 ? 0.0 : (y >= 1.0 ? 1.0 : std::pow(y, parameter_));
        case QuantileFamily::exponential:
            return y <= 0.0 ? 0.0 : -std::expm1(-parameter_ * y);
        case QuantileFamily::pareto:
            return y <= 1.0 ? 0.0 : 1.0 - std::pow(y, -parameter_);
    }
    return 0.0;
}

std::vector<double> prh_transform(std::span<const double> path, const QuantileSpec& spec) {
    std::vector<double> out;
    out.reserve(path.size());
    for (double x : path) {
        out.push_back(spec.quantile(x));
    }
    return out;
}

EmpiricalCdf::EmpiricalCdf(std::span<const double> sample) : sorted_(sample.begin(), sample.end()) {
    if (sorted_.empty()) {
        throw DomainError("empirical CDF needs at least one value");
    }
    if (!std::all_of(sorted_.begin(), sorted_.end(), [](double v) { return std::isfinite(v); })) {
        throw DomainError("empirical CDF values must be finite");
    }
    std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double x) const noexcept {
    const auto le = std::upper_bound(sorted_.begin(), sorted_.end(), x) - sorted_.begin();
    return static_cast<double>(le) / static_cast<double>(sorted_.size());
}

double EmpiricalCdf::plotting_position(double x) const noexcept {
    const auto lt = std::lower_bound(sorted_.begin(), sorted_.end(), x) - sorted_.begin();
    const auto le = std::upper_bound(sorted_.begin(), sorted_.end(), x) - sorted_.begin();
    // ranks lt+1 .. le are tied at x; an absent value gets rank lt + 1/2
    const double rank = static_cast<double>(lt) + (static_cast<double>(le - lt) + 1.0) / 2.0;
    return rank / static_cast<double>(sorted_.size() + 1);
}

std::vector<double> ecdf_transform(std::span<const double> series) {
    const EmpiricalCdf ecdf(series);
    std::vector<double> out;
    out.reserve(series.size());
    for (double v : series) {
        out.push_back(ecdf.plotting_position(v));
    }
    return out;
}

}  // namespace pfdp::core
