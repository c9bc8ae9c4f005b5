#include "pfdp/processes/moment_oracles.hpp"

#include <algorithm>
#include <cmath>

#include "pfdp/processes/kundu.hpp"
#include "pfdp/processes/maxar.hpp"

namespace pfdp::processes {
namespace {

// E max(U^{1/a}, c) for U uniform, c in [0,1]
double expected_max_with(double a, double c) {
    const double t = std::pow(c, a + 1.0);
    return t + a / (a + 1.0) * (1.0 - t);
}

}  // namespace

OracleIntegrand kundu_cross_moment_integrand(double a, double b) {
    return {"kundu E(X_n X_{n-1})",
            [a, b](double v, double w) {
                return expected_max_with(a, std::pow(v, 1.0 / b)) *
                       std::max(std::pow(v, 1.0 / a), std::pow(w, 1.0 / b));
            },
            {b / a}};
}

std::array<OracleIntegrand, 4> kundu_term_integrands(double a, double b) {
    return {{
        {"kundu term a",
         [a, b](double v, double w) {
             return w > std::pow(v, b / a)
                        ? std::pow(v, a / b) * std::pow(v, 1.0 / b) * std::pow(w, 1.0 / b)
                        : 0.0;
         },
         {b / a}},
        {"kundu term b",
         [a, b](double v, double w) {
             return w < std::pow(v, b / a) ? std::pow(v, a / b + 1.0 / b + 1.0 / a) : 0.0;
         },
         {b / a}},
        {"kundu term c",
         [a, b](double v, double w) {
             if (!(w > std::pow(v, b / a))) {
                 return 0.0;
             }
             const double u_part = a / (a + 1.0) * (1.0 - std::pow(v, (a + 1.0) / b));
             return std::pow(w, 1.0 / b) * u_part;
         },
         {b / a}},
        {"kundu term d",
         [a, b](double v, double u) {
             return u > std::pow(v, a / b)
                        ? std::pow(v, b / a) * std::pow(v, 1.0 / a) * std::pow(u, 1.0 / a)
                        : 0.0;
         },
         {a / b}},
    }};
}

OracleIntegrand maxar_cross_moment_integrand(const MaxArParams& params) {
    const double a = params.alpha();
    const double d = params.delta();
    return {"maxar E(X_0 X_1)",
            [a, d](double u0, double u1) {
                return std::pow(u0, 1.0 / a) *
                       std::max(std::pow(u0, 1.0 / (a - d)), std::pow(u1, 1.0 / d));
            },
            {d / (a - d)}};
}

double OracleRow::abs_error() const { return std::abs(closed_form - quadrature); }

std::vector<OracleRow> cross_moment_oracle_suite(const numerics::QuadratureOptions& options) {
    std::vector<OracleRow> rows;
    for (double a : {0.5, 1.0, 2.5}) {
        for (double b : {0.5, 1.0, 2.5}) {
            const auto oracle = kundu_cross_moment_integrand(a, b);
            const auto q = numerics::quad2d(oracle.f, oracle.curve, options);
            rows.push_back({"kundu", a, b, kundu_cross_moment(a, b), q.value, q.est_error});
        }
    }
    for (double a : {0.5, 2.0, 6.0}) {
        for (double ratio : {0.1, 0.5, 0.9}) {
            const MaxArParams params(a, ratio * a);
            const auto oracle = maxar_cross_moment_integrand(params);
            const auto q = numerics::quad2d(oracle.f, oracle.curve, options);
            rows.push_back(
                {"maxar", a, params.delta(), maxar_cross_moment(params), q.value, q.est_error});
        }
    }
    return rows;
}

}  // namespace pfdp::processes
