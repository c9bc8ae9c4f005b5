#pragma once

#include <cstddef>
#include <span>

namespace pfdp::processes {

/// Sample autocorrelation r_k = c_k / c_0 with c_k = (1/n) sum (x_i - m)(x_{i+k} - m)
/// and m the full-path mean. Requires n > lag + 1; throws
/// DegenerateVarianceError on a constant path.
[[nodiscard]] double empirical_autocorr(std::span<const double> path, std::size_t lag);

}  // namespace pfdp::processes
