#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pfdp::core {

// ---------------------------------------------------------------------------
// Marginal quantile transforms (PFD scale -> baseline family scale)
// ---------------------------------------------------------------------------

enum class QuantileFamily {
    power,        // F0(x) = x^a on [0,1]
    exponential,  // F0(y) = 1 - exp(-rate y)
    pareto,       // F0(y) = 1 - y^(-a), y >= 1
};

class QuantileSpec {
public:
    /// Throws DomainError unless the parameter is finite and positive.
    QuantileSpec(QuantileFamily family, double parameter);

    /// Lookup by name ("power", "exponential", "pareto").
    static QuantileSpec from_name(std::string_view name, double parameter);

    [[nodiscard]] QuantileFamily family() const noexcept { return family_; }
    [[nodiscard]] double parameter() const noexcept { return parameter_; }
    [[nodiscard]] std::string name() const;

    /// F0^{-1}(u); throws DomainError where the quantile diverges or u is outside [0,1].
    [[nodiscard]] double quantile(double u) const;
    [[nodiscard]] double cdf(double y) const;

private:
    QuantileFamily family_;
    double parameter_;
};

/// Elementwise Y_n = F0^{-1}(X_n). Monotone, so ranks are preserved.
[[nodiscard]] std::vector<double> prh_transform(std::span<const double> path,
                                                const QuantileSpec& spec);

// ---------------------------------------------------------------------------
// Empirical CDF
// ---------------------------------------------------------------------------

class EmpiricalCdf {
public:
    /// Throws DomainError on an empty or non-finite sample.
    explicit EmpiricalCdf(std::span<const double> sample);

    [[nodiscard]] std::size_t size() const noexcept { return sorted_.size(); }
    [[nodiscard]] const std::vector<double>& sorted_values() const noexcept { return sorted_; }

    /// Step function #{X_i <= x} / m.
    [[nodiscard]] double operator()(double x) const noexcept;

    /// (average rank of x among the sample) / (m + 1). A value absent from
    /// the sample sits halfway between its neighbours' ranks. Always in (0,1).
    [[nodiscard]] double plotting_position(double x) const noexcept;

private:
    std::vector<double> sorted_;
};

/// Rank transform r/(m+1) with average ranks for ties. Output lies strictly
/// inside (0,1) and is invariant under strictly increasing maps of the input.
[[nodiscard]] std::vector<double> ecdf_transform(std::span<const double> series);

}  // namespace pfdp::core
