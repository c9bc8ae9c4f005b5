#pragma once

#include <cstddef>
#include <functional>

#include "pfdp/numerics/rng.hpp"

namespace pfdp::numerics {

struct McEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
};

/// Sample mean and standard error of g over n draws, all taken in order from
/// `stream`. The result depends only on the stream's (seed, id) and n.
[[nodiscard]] McEstimate mc_expectation(const std::function<double(RngStream&)>& g,
                                        std::size_t n, RngStream stream);

/// Worker count from PFDP_WORKERS, else hardware concurrency (at least 1).
[[nodiscard]] unsigned default_workers();

/**
 * Runs task(i) for i in [0, count) on up to `workers` threads.
 *
 * Indices are claimed dynamically, so callers must write results by index and
 * draw randomness only from streams keyed by the index; then the outcome is
 * identical for any worker count. The first exception thrown by a task is
 * rethrown after all threads join.
 */
void parallel_for(std::size_t count, unsigned workers,
                  const std::function<void(std::size_t)>& task);

}  // namespace pfdp::numerics
