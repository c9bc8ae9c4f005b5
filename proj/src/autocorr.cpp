#include "pfdp/processes/autocorr.hpp"

#include <numeric>

#include "pfdp/errors.hpp"

namespace pfdp::processes {

double empirical_autocorr(std::span<const double> path, std::size_t lag) {
    const std::size_t n = path.size();
    if (n <= lag + 1) {
        throw DomainError("empirical_autocorr: path must be longer than lag + 1");
    }
    const double mean = std::accumulate(path.begin(), path.end(), 0.0) / static_cast<double>(n);
    double c0 = 0.0;
    for (double x : path) {
        c0 += (x - mean) * (x - mean);
    }
    if (!(c0 > 0.0)) {
        throw DegenerateVarianceError("empirical_autocorr: path has zero variance");
    }
    if (lag == 0) {
        return 1.0;
    }
    double ck = 0.0;
    for (std::size_t i = 0; i + lag < n; ++i) {
        ck += (path[i] - mean) * (path[i + lag] - mean);
    }
    return ck / c0;
}

}  // namespace pfdp::processes
