#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "pfdp/errors.hpp"
#include "pfdp/pipeline/analyze.hpp"
#include "pfdp/pipeline/series.hpp"
#include "pfdp/processes/autocorr.hpp"
#include "pfdp/processes/kundu.hpp"
#include "pfdp/processes/maxar.hpp"

using namespace pfdp;
using namespace pfdp::pipeline;

namespace {

TimeSeries series_of(std::vector<double> v) {
    TimeSeries s;
    s.values = std::move(v);
    return s;
}

TimeSeries maxar_series(double a, double d, std::size_t m, std::uint64_t seed) {
    numerics::RngStream s(seed, 0);
    return series_of(processes::simulate_maxar({a, d}, m, s).values);
}

TimeSeries kundu_series(double a, double b, std::size_t m, std::uint64_t seed) {
    numerics::RngStream s(seed, 0);
    return series_of(processes::simulate_kundu(processes::KunduOrderParams({a, b}), m, s).values);
}

AnalyzeOptions options_with(std::uint64_t seed, unsigned workers = 1) {
    AnalyzeOptions o;
    o.master_seed = seed;
    o.workers = workers;
    return o;
}

}  // namespace

TEST(LoadSeries, DateValue) {
    std::istringstream in("date,value\n2023-03-23,5900\n2023-03-24,5950\n2023-03-25,5920\n");
    const auto s = load_series(in);
    EXPECT_EQ(s.values, (std::vector<double>{5900, 5950, 5920}));
    EXPECT_EQ(s.labels, (std::vector<std::string>{"2023-03-23", "2023-03-24", "2023-03-25"}));
}

TEST(LoadSeries, ValueOnlyWithCommentsAndCrLf) {
    std::istringstream in("# gold\r\nvalue\r\n1.5\r\n\r\n2.5\r\n3\r\n");
    const auto s = load_series(in);
    EXPECT_EQ(s.values, (std::vector<double>{1.5, 2.5, 3}));
    EXPECT_TRUE(s.labels.empty());
}

TEST(LoadSeries, NonNumericNamesTheRow) {
    std::istringstream in("date,value\nd1,1\nd2,oops\nd3,3\n");
    try {
        (void)load_series(in);
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_NE(std::string(e.what()).find("oops"), std::string::npos);
    }
}

TEST(LoadSeries, Errors) {
    std::istringstream header_only("date,value\n");
    EXPECT_THROW((void)load_series(header_only), DomainError);
    std::istringstream no_value("date,price\nd1,1\n");
    EXPECT_THROW((void)load_series(no_value), ParseError);
    std::istringstream inf("value\n1\ninf\n2\n");
    EXPECT_THROW((void)load_series(inf), ParseError);
    std::istringstream short_row("date,value\nd1\n");
    EXPECT_THROW((void)load_series(short_row), ParseError);
    std::istringstream empty("");
    EXPECT_THROW((void)load_series(empty), ParseError);
}

TEST(Analyze, MaxArSelfRecovery) {
    const auto c = analyze(maxar_series(2, 0.5, 500, 41), options_with(1));
    // the rank transform fixes the sample mean at 1/2, so only delta/alpha is identified
    EXPECT_DOUBLE_EQ(c.maxar.estimate.alpha, 1.0);
    EXPECT_NEAR(c.maxar.estimate.delta / c.maxar.estimate.alpha, 0.25, 0.15 * 0.25);
    EXPECT_EQ(c.winner, processes::ModelTag::maxar);
    EXPECT_LT(c.mse_maxar, c.mse_kundu);
}

TEST(Analyze, KunduSampleCorrelation) {
    double sum = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto c = analyze(kundu_series(1, 1, 500, 100 + seed), options_with(seed));
        ASSERT_TRUE(c.sample_lag1_corr.has_value());
        sum += *c.sample_lag1_corr;
    }
    EXPECT_NEAR(sum / 20.0, 0.4, 0.05);
}

TEST(Analyze, MinimalSeriesIsComplete) {
    const auto c = analyze(series_of({1, 2, 3}), options_with(0));
    EXPECT_TRUE(c.kundu.degenerate_corrected);
    EXPECT_TRUE(c.maxar.degenerate_corrected);
    EXPECT_TRUE(c.maxar.estimate.boundary);
    EXPECT_EQ(c.maxar.model_corr, 0.0);
    EXPECT_GE(c.mse_kundu, 0.0);
    EXPECT_GE(c.mse_maxar, 0.0);
    const auto j = report(c);
    for (const char* key : {"schema_version", "config", "sample", "kundu", "maxar", "winner"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
}

TEST(Analyze, ConstantSeriesHasNoSampleCorrelation) {
    const auto c = analyze(series_of({5, 5, 5, 5}), options_with(0));
    EXPECT_FALSE(c.sample_lag1_corr.has_value());
    EXPECT_TRUE(report(c)["sample"]["lag1_corr"].is_null());
}

TEST(Analyze, RejectsShortSeries) {
    EXPECT_THROW((void)analyze(series_of({1, 2}), options_with(0)), DomainError);
}

TEST(Analyze, InvariantUnderIncreasingMaps) {
    auto s = maxar_series(3, 1, 200, 42);
    auto t = s;
    for (auto& v : t.values) {
        v = 1000.0 * std::log(v) + 7.0;
    }
    EXPECT_EQ(report(analyze(s, options_with(5))).dump(), report(analyze(t, options_with(5))).dump());
}

TEST(Analyze, DeterministicAcrossWorkers) {
    const auto s = kundu_series(2, 1, 300, 43);
    const auto a = report(analyze(s, options_with(9, 1))).dump(2);
    const auto b = report(analyze(s, options_with(9, 1))).dump(2);
    const auto c = report(analyze(s, options_with(9, 4))).dump(2);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, c);
    EXPECT_NE(a, report(analyze(s, options_with(10, 1))).dump(2));
}

TEST(Report, SchemaAndWinner) {
    const auto c = analyze(kundu_series(1, 2, 200, 44), options_with(3));
    const auto j = report(c);
    for (const char* key : {"alpha", "beta", "model_corr", "mse"}) {
        EXPECT_TRUE(j["kundu"].contains(key)) << key;
    }
    for (const char* key : {"alpha", "delta", "model_corr", "mse"}) {
        EXPECT_TRUE(j["maxar"].contains(key)) << key;
    }
    const double mk = j["kundu"]["mse"];
    const double mm = j["maxar"]["mse"];
    EXPECT_EQ(j["winner"], mk < mm ? "kundu" : "maxar");
    EXPECT_EQ(j["sample"]["m"], 200);
}

TEST(Report, RoundTripsByteIdentically) {
    const auto j = report(analyze(maxar_series(2, 1, 150, 45), options_with(4)));
    const std::string text = j.dump(2);
    EXPECT_EQ(nlohmann::ordered_json::parse(text).dump(2), text);
}

TEST(PredictiveMse, PerfectPredictorForConstantModel) {
    const std::vector<double> x{0.5, 0.5, 0.5};
    const PathSimulator sim = [](numerics::RngStream&, std::size_t n) {
        return std::vector<double>(n, 0.5);
    };
    EXPECT_EQ(predictive_mse(x, sim, 1.0, 3, 10, 4, 0, 0, 1), 0.0);
}

TEST(PredictiveMse, EmptyBinsFallBackToMarginalMean) {
    const std::vector<double> x{0.99, 0.1};
    // simulated paths never visit the top bin, so x[0] is predicted by 2/3
    const PathSimulator sim = [](numerics::RngStream&, std::size_t n) {
        return std::vector<double>(n, 0.2);
    };
    EXPECT_NEAR(predictive_mse(x, sim, 2.0, 2, 10, 5, 0, 0, 1),
                (0.1 - 2.0 / 3.0) * (0.1 - 2.0 / 3.0), 1e-15);
}
