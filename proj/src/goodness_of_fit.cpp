#include "pfdp/core/goodness_of_fit.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "pfdp/errors.hpp"

namespace pfdp::core {

double ks_statistic(std::span<const double> sample, const std::function<double(double)>& cdf) {
    if (sample.empty()) {
        throw DomainError("ks_statistic: empty sample");
    }
    std::vector<double> sorted(sample.begin(), sample.end());
    std::sort(sorted.begin(), sorted.end());
    const auto n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = cdf(sorted[i]);
        const double upper = static_cast<double>(i + 1) / n - f;
        const double lower = f - static_cast<double>(i) / n;
        d = std::max({d, upper, lower});
    }
    return d;
}

double ks_critical_value(std::size_t n, KsLevel level) {
    if (n == 0) {
        throw DomainError("ks_critical_value: n must be positive");
    }
    const double c = level == KsLevel::one_percent ? 1.63 : 1.36;
    return c / std::sqrt(static_cast<double>(n));
}

}  // namespace pfdp::core
