#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "pfdp/core/goodness_of_fit.hpp"
#include "pfdp/core/pfd.hpp"
#include "pfdp/core/transforms.hpp"
#include "pfdp/errors.hpp"
#include "pfdp/numerics/monte_carlo.hpp"
#include "pfdp/numerics/quadrature.hpp"
#include "pfdp/numerics/rng.hpp"

using namespace pfdp;
using namespace pfdp::core;
using numerics::RngStream;

namespace {

std::vector<double> draws(double alpha, std::size_t n, std::uint64_t seed) {
    const PfdLaw law(alpha);
    RngStream s(seed, 0);
    std::vector<double> out(n);
    for (auto& x : out) {
        x = sample_pfd(law, s);
    }
    return out;
}

std::vector<std::size_t> ranks(const std::vector<double>& v) {
    std::vector<std::size_t> idx(v.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        idx[i] = i;
    }
    std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return v[a] < v[b]; });
    return idx;
}

}  // namespace

TEST(PfdLaw, RejectsBadShape) {
    EXPECT_THROW(PfdLaw(0.0), DomainError);
    EXPECT_THROW(PfdLaw(-1.0), DomainError);
    EXPECT_THROW((void)PfdLaw(std::nan("")), DomainError);
    EXPECT_THROW((void)PfdLaw(HUGE_VAL), DomainError);
}

TEST(PfdCdf, Examples) {
    EXPECT_DOUBLE_EQ(pfd_cdf(PfdLaw(2), 0.5), 0.25);
    for (double a : {0.1, 1.0, 7.5}) {
        EXPECT_EQ(pfd_cdf(PfdLaw(a), 1.0), 1.0);
        EXPECT_EQ(pfd_cdf(PfdLaw(a), 0.0), 0.0);
    }
    EXPECT_THROW((void)pfd_cdf(PfdLaw(1), 1.5), DomainError);
}

TEST(PfdCdf, StrictlyIncreasing) {
    const PfdLaw law(0.3);
    double prev = 0.0;
    for (int i = 1; i <= 100; ++i) {
        const double c = pfd_cdf(law, i / 100.0);
        ASSERT_GT(c, prev);
        prev = c;
    }
}

TEST(PfdPdf, Examples) {
    EXPECT_DOUBLE_EQ(pfd_pdf(PfdLaw(1), 0.7), 1.0);
    EXPECT_DOUBLE_EQ(pfd_pdf(PfdLaw(2), 0.5), 1.0);
    EXPECT_THROW((void)pfd_pdf(PfdLaw(2), 0.0), DomainError);
}

TEST(PfdPdf, IntegratesToOne) {
    const PfdLaw law(3.7);
    const auto r = numerics::quad2d([&](double x, double) { return pfd_pdf(law, x); });
    EXPECT_NEAR(r.value, 1.0, 1e-9);
}

TEST(PfdPdf, IsDerivativeOfCdf) {
    const double h = 1e-5;
    for (double a : {0.5, 1.0, 2.0, 10.0}) {
        const PfdLaw law(a);
        for (int i = 1; i <= 10; ++i) {
            const double x = i / 11.0;
            const double fd = (pfd_cdf(law, x + h) - pfd_cdf(law, x - h)) / (2 * h);
            EXPECT_NEAR(fd, pfd_pdf(law, x), 1e-6) << "alpha " << a << " x " << x;
        }
    }
}

TEST(PfdQuantile, Examples) {
    EXPECT_DOUBLE_EQ(pfd_quantile(PfdLaw(2), 0.25), 0.5);
    EXPECT_EQ(pfd_quantile(PfdLaw(0.4), 1.0), 1.0);
    EXPECT_THROW((void)pfd_quantile(PfdLaw(1), -0.1), DomainError);
}

TEST(PfdQuantile, InvertsCdf) {
    for (double a : {0.1, 1.0, 3.0}) {
        const PfdLaw law(a);
        for (int i = 0; i <= 100; ++i) {
            const double u = i / 100.0;
            EXPECT_NEAR(pfd_cdf(law, pfd_quantile(law, u)), u, 1e-12);
        }
    }
}

TEST(PfdMeanVar, Examples) {
    auto mv = pfd_mean_var(PfdLaw(1));
    EXPECT_DOUBLE_EQ(mv.mean, 0.5);
    EXPECT_DOUBLE_EQ(mv.variance, 1.0 / 12.0);
    mv = pfd_mean_var(PfdLaw(2));
    EXPECT_DOUBLE_EQ(mv.mean, 2.0 / 3.0);
    EXPECT_DOUBLE_EQ(mv.variance, 1.0 / 18.0);
}

TEST(PfdMeanVar, MonteCarloMean) {
    const PfdLaw law(3);
    const auto r = numerics::mc_expectation([&](RngStream& s) { return sample_pfd(law, s); },
                                            1'000'000, RngStream(11, 0));
    EXPECT_NEAR(r.estimate, 0.75, 4 * r.std_error);
}

TEST(SamplePfd, Deterministic) {
    RngStream a(5, 5);
    RngStream b(5, 5);
    EXPECT_EQ(sample_pfd(PfdLaw(2), a), sample_pfd(PfdLaw(2), b));
}

TEST(SamplePfd, KsAtFivePercent) {
    const auto x = draws(2, 100000, 21);
    EXPECT_LT(ks_statistic(x, [](double v) { return v * v; }), 1.36 / std::sqrt(1e5));
    const auto u = draws(1, 100000, 22);
    EXPECT_LT(ks_statistic(u, [](double v) { return v; }), 1.36 / std::sqrt(1e5));
}

TEST(SamplePfd, KsAtOnePercentAcrossShapes) {
    std::uint64_t seed = 100;
    for (double a : {0.1, 0.5, 1.0, 2.0, 10.0}) {
        const auto x = draws(a, 100000, seed++);
        const PfdLaw law(a);
        const double d = ks_statistic(x, [&](double v) { return pfd_cdf(law, v); });
        EXPECT_LT(d, ks_critical_value(x.size(), KsLevel::one_percent)) << "alpha " << a;
        for (double v : x) {
            ASSERT_GT(v, 0.0);
            ASSERT_LT(v, 1.0);
        }
    }
}

TEST(ParetoReciprocal, Examples) {
    EXPECT_EQ(pareto_reciprocal(1.0), 1.0);
    EXPECT_EQ(pareto_reciprocal(0.5), 2.0);
    EXPECT_THROW((void)pareto_reciprocal(0.0), DomainError);
}

TEST(ParetoReciprocal, SurvivalOfMappedDraws) {
    const auto x = draws(2, 100000, 31);
    const auto above = std::count_if(x.begin(), x.end(),
                                     [](double v) { return pareto_reciprocal(v) > 2.0; });
    EXPECT_NEAR(static_cast<double>(above) / 1e5, 0.25, 0.005);
}

TEST(QuantileSpec, ByName) {
    EXPECT_EQ(QuantileSpec::from_name("pareto", 2).family(), QuantileFamily::pareto);
    EXPECT_EQ(QuantileSpec::from_name("exponential", 1).name(), "exponential");
    EXPECT_THROW((void)QuantileSpec::from_name("weibull", 1), DomainError);
    EXPECT_THROW(QuantileSpec(QuantileFamily::power, 0.0), DomainError);
}

TEST(PrhTransform, ExponentialExample) {
    const QuantileSpec spec(QuantileFamily::exponential, 1.0);
    const std::vector<double> x{1.0 - std::exp(-2.0)};
    EXPECT_NEAR(prh_transform(x, spec)[0], 2.0, 1e-12);
    EXPECT_THROW((void)spec.quantile(1.0), DomainError);
}

TEST(PrhTransform, PowerSelfTransformKeepsLaw) {
    // x^a on its own scale: F0^{-1}(F(x)) with F = F0 leaves PFD draws PFD.
    const double a = 2.5;
    const auto x = draws(a, 100000, 41);
    const QuantileSpec spec(QuantileFamily::power, a);
    std::vector<double> u(x.size());
    std::transform(x.begin(), x.end(), u.begin(), [&](double v) { return std::pow(v, a); });
    const auto y = prh_transform(u, spec);
    for (std::size_t i = 0; i < x.size(); i += 997) {
        EXPECT_NEAR(y[i], x[i], 1e-12);
    }
    EXPECT_LT(ks_statistic(y, [&](double v) { return spec.cdf(v); }),
              ks_critical_value(y.size(), KsLevel::one_percent));
}

TEST(PrhTransform, PreservesRanks) {
    const auto x = draws(1.5, 500, 43);
    for (auto family : {QuantileFamily::power, QuantileFamily::exponential, QuantileFamily::pareto}) {
        const auto y = prh_transform(x, QuantileSpec(family, 2.0));
        EXPECT_EQ(ranks(x), ranks(y));
    }
}

TEST(PrhTransform, CdfInvertsQuantile) {
    for (auto family : {QuantileFamily::power, QuantileFamily::exponential, QuantileFamily::pareto}) {
        const QuantileSpec spec(family, 1.7);
        for (double u : {0.01, 0.3, 0.5, 0.9}) {
            EXPECT_NEAR(spec.cdf(spec.quantile(u)), u, 1e-12);
        }
    }
}

TEST(EcdfTransform, Examples) {
    const std::vector<double> a{10, 20, 30};
    EXPECT_EQ(ecdf_transform(a), (std::vector<double>{0.25, 0.5, 0.75}));
    const std::vector<double> c{4, 4, 4};
    EXPECT_EQ(ecdf_transform(c), (std::vector<double>{0.5, 0.5, 0.5}));
}

TEST(EcdfTransform, InvariantUnderIncreasingMaps) {
    RngStream s(7, 0);
    std::vector<double> x(300);
    for (auto& v : x) {
        v = std::round(s.uniform() * 50.0);  // ties included
    }
    std::vector<double> y(x.size());
    std::transform(x.begin(), x.end(), y.begin(), [](double v) { return std::exp(v / 7.0) - 3.0; });
    const auto tx = ecdf_transform(x);
    EXPECT_EQ(tx, ecdf_transform(y));
    for (std::size_t i = 0; i < x.size(); ++i) {
        ASSERT_GT(tx[i], 0.0);
        ASSERT_LT(tx[i], 1.0);
        for (std::size_t j = 0; j < x.size(); ++j) {
            ASSERT_EQ(x[i] < x[j], tx[i] < tx[j]);
        }
    }
}

TEST(EmpiricalCdf, StepAndPlottingPosition) {
    const std::vector<double> a{3, 1, 2, 2};
    const EmpiricalCdf f(a);
    EXPECT_EQ(f.size(), 4u);
    EXPECT_EQ(f(0.5), 0.0);
    EXPECT_EQ(f(2.0), 0.75);
    EXPECT_EQ(f(9.0), 1.0);
    EXPECT_DOUBLE_EQ(f.plotting_position(2.0), 2.5 / 5.0);
    EXPECT_DOUBLE_EQ(f.plotting_position(1.5), 1.5 / 5.0);
    EXPECT_THROW(EmpiricalCdf(std::vector<double>{}), DomainError);
}

TEST(KsStatistic, Examples) {
    const std::vector<double> one{0.5};
    EXPECT_DOUBLE_EQ(ks_statistic(one, [](double u) { return u; }), 0.5);
    for (std::size_t n : {1u, 7u, 100u}) {
        std::vector<double> q(n);
        for (std::size_t i = 0; i < n; ++i) {
            q[i] = std::sqrt((i + 0.5) / static_cast<double>(n));  // PFD(2) quantiles
        }
        EXPECT_NEAR(ks_statistic(q, [](double v) { return v * v; }), 0.5 / n, 1e-12);
    }
}

TEST(KsStatistic, InvariantUnderIntegralTransform) {
    const auto x = draws(3, 2000, 51);
    const double d = ks_statistic(x, [](double v) { return v * v * v; });
    std::vector<double> u(x.size());
    std::transform(x.begin(), x.end(), u.begin(), [](double v) { return v * v * v; });
    EXPECT_NEAR(ks_statistic(u, [](double v) { return v; }), d, 1e-12);
}

TEST(KsCriticalValue, Levels) {
    EXPECT_DOUBLE_EQ(ks_critical_value(100, KsLevel::five_percent), 0.136);
    EXPECT_DOUBLE_EQ(ks_critical_value(100, KsLevel::one_percent), 0.163);
}
