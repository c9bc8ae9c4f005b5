#pragma once

#include <cstddef>
#include <vector>

namespace pfdp::processes {

enum class Direction { forward, reverse };

/**
 * Exponents (a_0, ..., a_k) of an order-k moving-maximum (Kundu) process
 *
 *   forward:  X_n = max_j U_{n-j}^{1/a_j}
 *   reverse:  X_n = max_j U_{n+j}^{1/a_j}
 *
 * The reverse process with (a_0..a_k) is pathwise the forward process with
 * (a_k..a_0), which is how its laws are evaluated.
 */
class KunduOrderParams {
public:
    /// Throws DomainError if empty or any exponent is not finite and positive.
    explicit KunduOrderParams(std::vector<double> alphas, Direction direction = Direction::forward);

    [[nodiscard]] const std::vector<double>& alphas() const noexcept { return alphas_; }
    [[nodiscard]] Direction direction() const noexcept { return direction_; }
    [[nodiscard]] std::size_t order() const noexcept { return alphas_.size() - 1; }
    [[nodiscard]] double total_shape() const noexcept;

    /// Exponents as seen by the equivalent forward process.
    [[nodiscard]] std::vector<double> forward_alphas() const;

private:
    std::vector<double> alphas_;
    Direction direction_;
};

/// (alpha, delta) of X_n = max(X_{n-1}^{alpha/(alpha-delta)}, U_n^{1/delta}).
class MaxArParams {
public:
    /// Relative gap (alpha - delta)/alpha below which the carried exponent
    /// alpha/(alpha-delta) is rejected as numerically meaningless.
    static constexpr double kMinRelativeGap = 1e-12;

    /// Throws DomainError unless 0 < delta < alpha with the relative gap above.
    MaxArParams(double alpha, double delta);

    [[nodiscard]] double alpha() const noexcept { return alpha_; }
    [[nodiscard]] double delta() const noexcept { return delta_; }
    /// alpha / (alpha - delta) > 1
    [[nodiscard]] double carry_exponent() const noexcept { return alpha_ / (alpha_ - delta_); }

private:
    double alpha_;
    double delta_;
};

/**
 * Exploratory higher-order recursion
 *
 *   X_n = max(X_{n-k}^{d_k}, ..., X_{n-1}^{d_1}, U_n^{1/d})
 *
 * inner_exponents is ordered (d_k, ..., d_1) as in the formula; start_values
 * are X_0..X_{k-1}, emitted as the first k path values.
 */
class HigherMaxArParams {
public:
    HigherMaxArParams(std::vector<double> inner_exponents, double innovation_exponent,
                      std::vector<double> start_values);

    [[nodiscard]] const std::vector<double>& inner_exponents() const noexcept { return inner_; }
    [[nodiscard]] double innovation_exponent() const noexcept { return innovation_; }
    [[nodiscard]] const std::vector<double>& start_values() const noexcept { return starts_; }
    [[nodiscard]] std::size_t order() const noexcept { return inner_.size(); }

private:
    std::vector<double> inner_;
    double innovation_;
    std::vector<double> starts_;
};

}  // namespace pfdp::processes
