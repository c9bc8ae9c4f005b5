#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("pfdp_cli_" + std::to_string(::getpid()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    // Runs `pfdp args` inside the scratch directory; stdout goes to out.txt.
    int run(const std::string& args, const std::string& env = "") {
        const std::string cmd = "cd '" + dir_.string() + "' && " + env + " '" PFDP_CLI_PATH "' " +
                                args + " > out.txt 2> err.txt";
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }

    std::string read(const std::string& name) const {
        std::ifstream in(dir_ / name, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    void write(const std::string& name, const std::string& text) const {
        std::ofstream(dir_ / name, std::ios::binary) << text;
    }

    fs::path dir_;
};

}  // namespace

TEST_F(Cli, SimulateIsDeterministic) {
    const std::string cmd = "simulate --model maxar --alpha 2 --delta 1 --n 10 --seed 1 --out a.csv";
    ASSERT_EQ(run(cmd), 0);
    const std::string first = read("a.csv");
    fs::remove(dir_ / "a.csv");
    ASSERT_EQ(run(cmd), 0);
    EXPECT_FALSE(first.empty());
    EXPECT_EQ(first, read("a.csv"));
    EXPECT_EQ(first.rfind("# invocation: pfdp " + cmd + "\n", 0), 0u);
}

TEST_F(Cli, SimulateKunduCsv) {
    ASSERT_EQ(run("simulate --model kundu --alphas 1,1 --n 100 --seed 7 --out path.csv"), 0);
    std::istringstream in(read("path.csv"));
    std::string line;
    int values = 0;
    bool header = false;
    while (std::getline(in, line)) {
        if (line.rfind("#", 0) == 0) {
            continue;
        }
        if (!header) {
            EXPECT_EQ(line, "x");
            header = true;
            continue;
        }
        const double v = std::stod(line);
        EXPECT_GT(v, 0.0);
        EXPECT_LT(v, 1.0);
        ++values;
    }
    EXPECT_EQ(values, 100);
}

TEST_F(Cli, SimulateJsonAndTransform) {
    ASSERT_EQ(run("simulate --model kundu --alphas 1,2,3 --reverse --n 5 --seed 2 --format json "
                  "--transform pareto --transform-param 2 --out p.json"),
              0);
    const auto j = nlohmann::json::parse(read("p.json"));
    EXPECT_EQ(j["n"], 5);
    EXPECT_EQ(j["transform"]["family"], "pareto");
    for (double v : j["values"]) {
        EXPECT_GE(v, 1.0);
    }
    EXPECT_TRUE(j.contains("invocation"));
}

TEST_F(Cli, MomentsKundu) {
    ASSERT_EQ(run("moments --model kundu --alphas 1,1"), 0);
    const std::string out = read("out.txt");
    EXPECT_NE(out.find("mean 0.666667\n"), std::string::npos);
    EXPECT_NE(out.find("variance 0.055556\n"), std::string::npos);
    EXPECT_NE(out.find("lag1_corr 0.400000\n"), std::string::npos);
}

TEST_F(Cli, MomentsMaxAr) {
    ASSERT_EQ(run("moments --model maxar --alpha 2 --delta 1"), 0);
    const std::string out = read("out.txt");
    EXPECT_NE(out.find("lag1_corr 0.571429\n"), std::string::npos);
    EXPECT_NE(out.find("p_descent 0.666667\n"), std::string::npos);
}

TEST_F(Cli, CorrCurve) {
    ASSERT_EQ(run("corr-curve --model maxar --alpha 1 --delta-grid 0:1:50 --out c.csv"), 0);
    std::istringstream in(read("c.csv"));
    std::string line;
    int rows = 0;
    double prev = 2.0;
    while (std::getline(in, line)) {
        if (line.rfind("#", 0) == 0 || line == "delta,corr") {
            continue;
        }
        const double corr = std::stod(line.substr(line.find(',') + 1));
        EXPECT_LT(corr, prev);
        prev = corr;
        ++rows;
    }
    EXPECT_EQ(rows, 50);
}

TEST_F(Cli, Oracle) {
    EXPECT_EQ(run("oracle --check cross-moments --tol 1e-6"), 0);
    EXPECT_NE(read("out.txt").find("max_abs_error"), std::string::npos);
}

TEST_F(Cli, FitSimulatedPath) {
    ASSERT_EQ(run("simulate --model maxar --alpha 2 --delta 1 --n 20000 --seed 3 --out p.csv"), 0);
    ASSERT_EQ(run("fit --model maxar --input p.csv --out fit.json"), 0);
    const auto j = nlohmann::json::parse(read("fit.json"));
    EXPECT_NEAR(j["estimate"]["alpha"].get<double>(), 2.0, 0.1);
    EXPECT_NEAR(j["estimate"]["delta"].get<double>(), 1.0, 0.1);
}

TEST_F(Cli, StudyAndAnalyzeIgnoreWorkerCount) {
    const std::string study = "study --model maxar --params 2,0.5 --sizes 20,50 --replicates 50 "
                              "--seed 4 --out s.json";
    ASSERT_EQ(run(study, "PFDP_WORKERS=1"), 0);
    const std::string s1 = read("s.json");
    ASSERT_EQ(run(study + " --workers 4"), 0);
    EXPECT_EQ(s1, read("s.json"));

    ASSERT_EQ(run("simulate --model kundu --alphas 1,2 --n 120 --seed 5 --out k.csv"), 0);
    ASSERT_EQ(run("fit --model kundu --input k.csv"), 0);
    std::string series = "value\n";
    {
        std::istringstream in(read("k.csv"));
        std::string line;
        while (std::getline(in, line)) {
            if (line.rfind("#", 0) != 0 && line != "x") {
                series += line + "\n";
            }
        }
    }
    write("series.csv", series);
    ASSERT_EQ(run("analyze --input series.csv --seed 6 --paths 50 --out r.json", "PFDP_WORKERS=1"), 0);
    const std::string r1 = read("r.json");
    ASSERT_EQ(run("analyze --input series.csv --seed 6 --paths 50 --out r.json", "PFDP_WORKERS=4"), 0);
    EXPECT_EQ(r1, read("r.json"));
    const auto j = nlohmann::json::parse(r1);
    EXPECT_EQ(j["invocation"], "pfdp analyze --input series.csv --seed 6 --paths 50 --out r.json");
    EXPECT_EQ(j["schema_version"], 1);
}

TEST_F(Cli, ExitCodes) {
    EXPECT_EQ(run("simulate --model maxar --alpha 2 --delta 1 --n 10"), 2);  // missing --seed
    EXPECT_NE(read("err.txt").find("--seed"), std::string::npos);
    EXPECT_EQ(run("frobnicate"), 2);
    EXPECT_EQ(run("moments --model kundu --alphas 1,x"), 2);
    EXPECT_EQ(run("corr-curve --model maxar --alpha 1 --delta-grid 1:0:5"), 2);
    EXPECT_EQ(run("simulate --model maxar --alpha 1 --delta 2 --n 10 --seed 1"), 1);
    EXPECT_NE(read("err.txt").find("delta"), std::string::npos);
    EXPECT_EQ(run("corr-curve --model maxar --alpha 1 --delta-grid 0:2:5"), 1);
    write("bad.csv", "value\n1\nnope\n3\n");
    EXPECT_EQ(run("analyze --input bad.csv --seed 1"), 1);
    EXPECT_NE(read("err.txt").find("line 3"), std::string::npos);
    EXPECT_EQ(run("analyze --input missing.csv --seed 1"), 1);
    EXPECT_EQ(run("--help"), 0);
}
