#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace pfdp::core {

/// Two-sided one-sample Kolmogorov-Smirnov distance
/// max_i max(i/n - F(x_(i)), F(x_(i)) - (i-1)/n).
[[nodiscard]] double ks_statistic(std::span<const double> sample,
                                  const std::function<double(double)>& cdf);

enum class KsLevel { five_percent, one_percent };

/// Asymptotic critical value c/sqrt(n): c = 1.36 at 5%, 1.63 at 1%.
[[nodiscard]] double ks_critical_value(std::size_t n, KsLevel level);

}  // namespace pfdp::core
