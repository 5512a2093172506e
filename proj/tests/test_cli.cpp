#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include <pstat/cli.hpp>

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = pstat::cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ZnPrintsExactRational) {
    const auto r = run({"zn", "--kind", "hst", "--point", "2,3", "--n", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "25\n");
    EXPECT_EQ(run({"zn", "--kind", "fermi", "--point", "2,3,5", "--n", "2"}).out, "31\n");
    EXPECT_EQ(run({"zn", "--kind", "bose", "--point", "1/2,1/3", "--n", "1"}).out, "5/6\n");
}

TEST(Cli, ZnWithExponents) {
    const auto r = run({"zn", "--kind", "bose", "--exponents", "1,2", "--n", "2", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out), nlohmann::json::parse("[0,0,1,1,1]"));
}

TEST(Cli, SchurBothBackends) {
    auto r = run({"schur", "--shape", "2,1", "--point", "2,3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "tableau: 30\nbialternant: 30\n");
    r = run({"schur", "--shape", "1", "--point", "2,2", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["tableau"], "4");
    EXPECT_TRUE(j["bialternant"].is_null());
}

TEST(Cli, Partitions) {
    EXPECT_EQ(run({"partitions", "4"}).out, "(4)\n(3,1)\n(2,2)\n(2,1,1)\n(1,1,1,1)\n");
    EXPECT_EQ(run({"partitions", "4", "--kind", "even-cols"}).out, "(2,2)\n(1,1,1,1)\n");
    EXPECT_EQ(run({"partitions", "6", "--kind", "even-cols", "--max-parts", "3"}).out, "(3,3)\n");
}

TEST(Cli, GpfDefinitionAndClosedFormAgree) {
    const auto a = run({"gpf", "--kind", "fermi", "--point", "2,3,5", "--nmax", "5"});
    const auto b = run({"gpf", "--kind", "fermi", "--point", "2,3,5", "--nmax", "5", "--closed-form"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, "[1, 10, 31, 30, 0, 0]\n");
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, VerifyReportsEquality) {
    const auto r = run({"verify", "--kind", "bose", "--point", "2,3,5", "--nmax", "4"});
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j.size(), 1u);
    EXPECT_EQ(j[0]["kind"], "bose");
    EXPECT_EQ(j[0]["equal"], true);
    EXPECT_TRUE(j[0]["first_mismatch"].is_null());
    EXPECT_EQ(j[0]["nmax"], 4);
}

TEST(Cli, VerifyAllIsDeterministic) {
    const auto a = run({"verify", "--all", "--m", "3", "--seed", "7", "--nmax", "5"});
    const auto b = run({"verify", "--all", "--m", "3", "--seed", "7", "--nmax", "5"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    for (const auto& rep : nlohmann::json::parse(a.out)) EXPECT_EQ(rep["equal"], true) << rep["kind"];
}

TEST(Cli, EquivalenceReport) {
    const auto r = run({"equivalence", "--qmax", "8"});
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["equal"], true);
    EXPECT_EQ(j["qmax"], 8);
    EXPECT_EQ(j["degeneracy_table"][2]["degeneracy"], 2);
    EXPECT_EQ(j["degeneracy_table"][2]["energy_halfq"], 7);
    const auto csv = run({"equivalence", "--qmax", "3", "--format", "csv"});
    EXPECT_EQ(csv.out, "m,energy_halfq,degeneracy\n0,3,1\n1,5,1\n2,7,2\n");
}

TEST(Cli, ThermoAcceptsNegativeMu) {
    const auto a = run({"thermo", "--kind", "bose", "--spectrum", "eq2", "--beta", "1", "--mu", "-1.5", "--format", "json"});
    const auto b = run({"thermo", "--kind", "bose", "--spectrum", "eq2", "--beta", "1", "--mu=-1.5", "--format", "json"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    const auto j = nlohmann::json::parse(a.out);
    EXPECT_DOUBLE_EQ(j["mu_over_hw"].get<double>(), -1.5);
    EXPECT_GT(j["meanN"].get<double>(), 0.0);
}

TEST(Cli, ThermoTargetAndSweep) {
    const auto r = run({"thermo", "--kind", "fermi", "--spectrum", "eq2", "--qmax", "3", "--beta", "1", "--target-n", "1",
                        "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(nlohmann::json::parse(r.out)["meanN"].get<double>(), 1.0, 1e-8);
    const auto sweep = run({"thermo", "--kind", "fermi", "--spectrum", "eq2", "--qmax", "3", "--beta", "1", "--mu-range",
                            "-1:1:5"});
    EXPECT_EQ(sweep.code, 0);
    EXPECT_EQ(std::count(sweep.out.begin(), sweep.out.end(), '\n'), 6);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"zn", "--kind", "boson", "--point", "2", "--n", "1"}).code, 2);
    EXPECT_EQ(run({"zn", "--kind", "bose", "--point", "2,x", "--n", "1"}).code, 2);
    EXPECT_EQ(run({"zn", "--kind", "bose", "--n", "1"}).code, 2);
    EXPECT_EQ(run({"verify", "--kind", "pq:2:2", "--point", "2,3"}).code, 2);
    EXPECT_EQ(run({"verify", "--kind", "parafermi:2", "--point", "2,2,3"}).code, 3);
    EXPECT_EQ(run({"thermo", "--kind", "bose", "--spectrum", "eq2", "--qmax", "1", "--nmax", "4", "--beta", "1",
                   "--target-n", "3"})
                  .code,
              3);
    EXPECT_EQ(run({"thermo", "--kind", "fermi", "--spectrum", "eq2", "--qmax", "1", "--beta", "1", "--target-n", "5"}).code,
              3);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, OutFile) {
    const auto path = std::filesystem::temp_directory_path() / "pstat_cli_out_test.txt";
    const auto r = run({"--out", path.string(), "zn", "--kind", "hst", "--point", "2,3", "--n", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "25");
    in.close();
    std::filesystem::remove(path);
}
