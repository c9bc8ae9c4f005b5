#pragma once

#include <array>
#include <string>
#include <vector>

#include "pfdp/numerics/quadrature.hpp"
#include "pfdp/processes/params.hpp"

namespace pfdp::processes {

// Cross-moment expectations written directly from the process definitions, as
// integrands on the unit square for quad2d. One uniform is integrated out
// analytically in each case; the kink where the maximum switches arguments is
// the breakpoint curve. Nothing here calls the closed forms.

struct OracleIntegrand {
    std::string name;
    numerics::Integrand2D f;
    numerics::BreakpointCurve curve;
};

/// E(X_n X_{n-1}) for X_n = max(U^{1/a}, V^{1/b}), X_{n-1} = max(V^{1/a}, W^{1/b}):
/// outer v, inner w, with E_U max(U^{1/a}, c) = c^{a+1} + a/(a+1) (1 - c^{a+1}).
[[nodiscard]] OracleIntegrand kundu_cross_moment_integrand(double alpha, double beta);

/// The four pieces of the same expectation (see KunduCrossMomentTerms).
[[nodiscard]] std::array<OracleIntegrand, 4> kundu_term_integrands(double alpha, double beta);

/// E(U_0^{1/a} max(U_0^{1/(a-d)}, U_1^{1/d})): outer u0, inner u1.
[[nodiscard]] OracleIntegrand maxar_cross_moment_integrand(const MaxArParams& params);

struct OracleRow {
    std::string process;
    double p1 = 0.0;
    double p2 = 0.0;
    double closed_form = 0.0;
    double quadrature = 0.0;
    double quadrature_error = 0.0;

    [[nodiscard]] double abs_error() const;
};

/// Closed form vs quad2d on 3x3 grids: Kundu (alpha, beta) in {0.5, 1, 2.5}^2
/// and max-AR alpha in {0.5, 2, 6} with delta/alpha in {0.1, 0.5, 0.9}.
[[nodiscard]] std::vector<OracleRow> cross_moment_oracle_suite(
    const numerics::QuadratureOptions& options = {});

}  // namespace pfdp::processes
