#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "gwalk/cli.hpp"
#include "gwalk/errors.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = gwalk::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("gwalk_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string file(const std::string& name, const std::string& text) {
        auto p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }

    fs::path dir_;
};

const char* kWorkedExample =
    "# the worked example\n"
    "ring x, y\n"
    "from degrevlex\n"
    "to lex\n"
    "[y^3] - x^2\n"
    "[x^3] - y^2 - x\n";

}  // namespace

TEST_F(Cli, GbPrintsSortedReducedBasis) {
    auto r = run({"gb", file("p.txt", kWorkedExample), "--order", "lex"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "y^9 - 2*y^6 - y^4 + y^3\nx - y^7 + y^4 + y^2\n");
}

TEST_F(Cli, GbIsAFixedPoint) {
    auto first = run({"gb", file("p.txt", kWorkedExample), "--order", "degrevlex"});
    ASSERT_EQ(first.code, 0) << first.err;
    auto second = run({"gb", file("q.txt", "ring x, y\n" + first.out), "--order", "degrevlex"});
    EXPECT_EQ(second.out, first.out);
    auto again = run({"gb", file("p.txt", kWorkedExample), "--order", "degrevlex"});
    EXPECT_EQ(again.out, first.out);
}

TEST_F(Cli, GbErrors) {
    auto empty = run({"gb", file("e.txt", "ring x, y\n"), "--order", "lex"});
    EXPECT_EQ(empty.code, 2);
    EXPECT_NE(empty.err.find("EmptyIdeal"), std::string::npos);

    auto zero = run({"gb", file("z.txt", "ring x, y\nx - x\n"), "--order", "lex"});
    EXPECT_EQ(zero.code, 2);
    EXPECT_NE(zero.err.find("zero polynomial"), std::string::npos);

    auto bad = run({"gb", file("b.txt", "ring x, y\nx + 2*w\n"), "--order", "lex"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("2:"), std::string::npos) << bad.err;

    auto arity = run({"gb", file("a.txt", "ring x, y\nx\n"), "--order", "matrix[[1,0,0],[0,1,0],[0,0,1]]"});
    EXPECT_EQ(arity.code, 2);

    auto group = run({"gb", file("g.txt", "ring t, x\nx - t^2\n"), "--order", "knapsack-source"});
    EXPECT_EQ(group.code, 2);
    EXPECT_TRUE(group.out.empty());

    EXPECT_EQ(run({"gb"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"gb", (dir_ / "missing.txt").string(), "--order", "lex"}).code, 2);
}

TEST_F(Cli, WalkTrace) {
    auto r = run({"walk", file("p.txt", kWorkedExample), "--trace"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "(-2,3) (-1,4) (-1,7)\ny^9 - 2*y^6 - y^4 + y^3\nx - y^7 + y^4 + y^2\n");
}

TEST_F(Cli, WalkFromGeneratorsAndJson) {
    auto r = run({"walk", file("p.txt", "ring x, y\nx^2 - y^3\nx^3 - y^2 - x\n"), "--from", "degrevlex", "--to",
                  "lex", "--from-generators", "--json"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\"facet\":[-2,3]"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("x - y^7 + y^4 + y^2"), std::string::npos);
}

TEST_F(Cli, WalkSameOrderEchoesInput) {
    auto r = run({"walk", file("p.txt", kWorkedExample), "--to", "degrevlex", "--trace"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "y^3 - x^2\nx^3 - y^2 - x\n");
}

TEST_F(Cli, WalkRejectsCorruptedMarking) {
    auto r = run({"walk", file("p.txt", "ring x, y\nfrom degrevlex\nto lex\ny^3 - [x^2]\n[x^3] - y^2 - x\n")});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("InvalidInputBasis"), std::string::npos);
    EXPECT_NE(r.err.find("[x^2]"), std::string::npos) << r.err;
}

TEST_F(Cli, WalkTruncated) {
    auto r = run({"walk", file("p.txt", kWorkedExample), "--truncate", "1,1", "--stats"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("y^9 - 2*y^6 - y^4 + y^3\nx - y^7 + y^4 + y^2\n", 0), 0u) << r.out;
    EXPECT_EQ(run({"walk", file("p.txt", kWorkedExample), "--truncate", "3,1"}).code, 2);
}

TEST_F(Cli, WalkClassic) {
    auto r = run({"walk-classic", file("p.txt", kWorkedExample), "--w0", "1,1", "--t0", "9,1"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "y^9 - 2*y^6 - y^4 + y^3\nx - y^7 + y^4 + y^2\n");
    auto face = run({"walk-classic", file("p.txt", kWorkedExample), "--w0", "1,1", "--t0", "1,0"});
    EXPECT_EQ(face.out, r.out);
    auto out = run({"walk-classic", file("p.txt", kWorkedExample), "--w0", "3,1", "--t0", "9,1"});
    EXPECT_EQ(out.code, 2);
    EXPECT_NE(out.err.find("W0NotInCone"), std::string::npos);
}

TEST_F(Cli, Knapsack) {
    auto inst = file("a.txt", "2 3\n");
    auto queries = file("b.txt", "7\n1\n");
    auto r = run({"knapsack", inst, queries, "--stats", "--no-basis"});
    EXPECT_EQ(r.code, 0) << r.err;
    std::istringstream lines(r.out);
    std::string stats, q7, q1;
    std::getline(lines, stats);
    std::getline(lines, q7);
    std::getline(lines, q1);
    EXPECT_EQ(stats.rfind("|Gsigma|=2 |Gtau|=", 0), 0u) << stats;
    EXPECT_NE(stats.find(" steps="), std::string::npos);
    EXPECT_EQ(q7.rfind("FEASIBLE ", 0), 0u);
    EXPECT_EQ(q1, "INFEASIBLE 1");

    auto even = run({"knapsack", file("c.txt", "2 4\n"), "--b", "3", "--no-basis"});
    EXPECT_EQ(even.out, "INFEASIBLE 1\n");
    EXPECT_EQ(run({"knapsack", file("d.txt", "2 -4\n")}).code, 2);
}

TEST(ProblemFile, Parse) {
    auto pf = gwalk::cli::parse_problem("ring a b\norder lex\n\n# c\na - b,\n");
    EXPECT_EQ(pf.variables, (std::vector<std::string>{"a", "b"}));
    EXPECT_EQ(pf.order.value(), "lex");
    ASSERT_EQ(pf.generators.size(), 1u);
    EXPECT_EQ(pf.generators[0], "a - b");
    EXPECT_EQ(pf.generator_lines[0], 5u);
    EXPECT_THROW(gwalk::cli::parse_problem("x + y\n"), gwalk::ParseError);
    EXPECT_THROW(gwalk::cli::parse_problem("ring x, x\n"), gwalk::ParseError);
}
