#include <cstdlib>
#include <sstream>

#include <gtest/gtest.h>

#include "detfsing/cli.hpp"

using namespace detfsing;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string l; std::getline(is, l);)
        if (!l.empty()) out.push_back(l);
    return out;
}

// scoped environment variable
struct EnvVar {
    std::string name;
    EnvVar(std::string n, const std::string& value) : name(std::move(n)) { ::setenv(name.c_str(), value.c_str(), 1); }
    ~EnvVar() { ::unsetenv(name.c_str()); }
};

}  // namespace

TEST(Cli, GenPrintsGenerators) {
    auto r = run({"gen", "delta", "--m", "2", "--n", "2"});
    ASSERT_EQ(r.code, 0);
    // x12 * x21 * det, of degree m*n
    EXPECT_EQ(r.out, "x[1,2]^2*x[2,1]^2 + x[1,1]*x[1,2]*x[2,1]*x[2,2]\n");

    r = run({"gen", "minors", "--m", "2", "--n", "3", "--t", "2"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(lines(r.out).size(), 3u);

    r = run({"--json", "gen", "matrix", "--m", "2", "--n", "2"});
    ASSERT_EQ(r.code, 0);
    auto j = Json::parse(r.out);
    EXPECT_EQ(j.at("kind"), "matrix");
    EXPECT_EQ(j.at("rows").at(1).at(0), "x[2,1]");
}

TEST(Cli, GeneratorsParseBack) {
    auto r = run({"gen", "divisor", "--m", "3", "--n", "3", "--t", "3"});
    ASSERT_EQ(r.code, 0);
    auto R = generic_matrix(3, 3, 2).ring();
    for (const auto& l : lines(r.out)) EXPECT_EQ(to_string(parse_polynomial(l, R)), l);
}

TEST(Cli, PassingCheckExitsZero) {
    auto r = run({"--json", "check", "split", "--m", "2", "--n", "3", "--t", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto rep = report_from_json(Json::parse(r.out));
    EXPECT_EQ(rep.check, "split");
    EXPECT_EQ(rep.verdict, Verdict::pass);
    EXPECT_EQ(rep.params.at("m"), 2);
}

TEST(Cli, FailingCheckExitsOneWithWitness) {
    auto r = run({"--json", "check", "compat", "--m", "2", "--n", "2", "--t", "2", "--ideal", "x[1,1]"});
    ASSERT_EQ(r.code, 1);
    auto rep = report_from_json(Json::parse(r.out));
    EXPECT_EQ(rep.verdict, Verdict::fail);
    EXPECT_EQ(rep.witness.at("remainder"), "x[1,1]*x[1,2]^2*x[2,1]^2");
}

TEST(Cli, CustomPremultiplier) {
    // Phi . 1 is not a splitting, and (x11) is not compatible with it either
    auto r = run({"--json", "check", "compat", "--m", "2", "--n", "2", "--t", "2", "--a", "1"});
    auto rep = report_from_json(Json::parse(r.out));
    EXPECT_EQ(rep.witness.at("split"), false);
    r = run({"check", "compat", "--m", "2", "--n", "2", "--t", "2", "--a", "0"});
    EXPECT_EQ(r.code, 2);
}

TEST(Cli, UsageErrors) {
    for (std::vector<std::string> args : {
             std::vector<std::string>{},
             {"frobnicate"},
             {"check", "split", "--m", "0", "--n", "2", "--t", "1"},
             {"check", "split", "--m", "2", "--n", "2", "--t", "3"},
             {"check", "nosuch", "--m", "2", "--n", "2", "--t", "2"},
             {"check", "split", "--m", "two"},
             {"verify", "reduction", "--m", "2", "--t", "2", "--s", "2", "--block", "q", "--row", "1", "--col", "1"},
             {"check", "compat", "--m", "2", "--n", "2", "--t", "2", "--ideal", "x[9,9]"},
             {"lattice", "--m", "2", "--n", "2", "--t", "2", "--node-cap", "1"},
         }) {
        auto r = run(args);
        EXPECT_EQ(r.code, 2) << ::testing::PrintToString(args) << "\n" << r.out;
        EXPECT_FALSE(r.err.empty());
    }
}

TEST(Cli, HelpExitsZero) {
    auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, BudgetFromEnvironmentAndFlag) {
    EnvVar cap("DETF_MAX_GB_STEPS", "5");
    auto r = run({"--json", "check", "fedder", "--m", "3", "--n", "3", "--t", "2"});
    ASSERT_EQ(r.code, 3) << r.out << r.err;
    auto rep = report_from_json(Json::parse(r.out));
    EXPECT_EQ(rep.verdict, Verdict::inconclusive);
    EXPECT_EQ(rep.witness.at("budget_exhausted"), "reductions");

    // the flag wins over the environment
    r = run({"--json", "--max-gb-steps", "5000000", "check", "fedder", "--m", "3", "--n", "3", "--t", "2"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST(Cli, MalformedEnvironmentIsAUsageError) {
    EnvVar cap("DETF_MAX_SECONDS", "soon");
    EXPECT_EQ(run({"check", "split", "--m", "2", "--n", "2", "--t", "2"}).code, 2);
}

TEST(Cli, TextModeShape) {
    auto r = run({"check", "dim", "--m", "2", "--n", "2", "--t", "2"});
    ASSERT_EQ(r.code, 0);
    auto ls = lines(r.out);
    ASSERT_GE(ls.size(), 2u);
    EXPECT_EQ(ls.front(), "[pass] dim m=2 n=2 t=2");
    EXPECT_EQ(ls.back().rfind("  stats: ", 0), 0u);
}

TEST(Cli, ReportJsonRoundTrip) {
    auto r = run({"--json", "verify", "suite"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto ls = lines(r.out);
    EXPECT_EQ(ls.size(), default_grid().size());
    for (const auto& l : ls) {
        auto j = Json::parse(l);
        EXPECT_EQ(report_to_json(report_from_json(j)).dump(), l);
    }
    EXPECT_THROW(report_from_json(Json::parse(R"({"check":"x"})")), std::invalid_argument);
    EXPECT_THROW(report_from_json(Json::parse(
                     R"({"check":"x","params":{},"verdict":"maybe","witness":{},"stats":{}})")),
                 std::invalid_argument);
}

TEST(Cli, SuiteOutputIsDeterministic) {
    auto strip = [](const std::string& text) {
        std::string out;
        for (const auto& l : lines(text)) {
            auto j = Json::parse(l);
            j["stats"].erase("elapsed_ms");
            out += j.dump() + "\n";
        }
        return out;
    };
    auto a = run({"--json", "verify", "suite", "--workers", "2"});
    auto b = run({"--json", "verify", "suite"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(strip(a.out), strip(b.out));
}

TEST(Cli, SingleVerifications) {
    EXPECT_EQ(run({"verify", "rowdec", "--m", "3", "--n", "3", "--t", "2"}).code, 0);
    EXPECT_EQ(run({"verify", "gammadec", "--r", "2", "--n", "3"}).code, 0);
    EXPECT_EQ(run({"verify", "sylvester", "--m", "3", "--n", "3", "--t", "2", "--k", "1"}).code, 0);
    EXPECT_EQ(run({"verify", "reduction", "--m", "2", "--t", "2", "--s", "2", "--block", "z", "--row", "1", "--col", "1"})
                  .code,
              0);
}

TEST(Cli, LatticeExitCodes) {
    auto r = run({"lattice", "--m", "2", "--n", "2", "--t", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("digraph lattice {", 0), 0u);

    r = run({"lattice", "--m", "2", "--n", "2", "--t", "2", "--seed", "x[1,1]"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("seed"), std::string::npos);

    r = run({"lattice", "--m", "2", "--n", "2", "--t", "2", "--seed", "x[1,2]", "--node-cap", "3"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.out.find("\"complete\":false"), std::string::npos);
}
