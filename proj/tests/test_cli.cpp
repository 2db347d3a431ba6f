#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(HURWITZ_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string tmp(const std::string& name) { return ::testing::TempDir() + "hurwitz_cli_" + name; }

}  // namespace

TEST(Cli, ExpandSucceeds) {
    const auto r = run("expand '1/3+1/7 i'");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"terminated\": true"), std::string::npos);
    EXPECT_NE(r.out.find("\"roundtrip\": true"), std::string::npos);
}

TEST(Cli, EvalAndClassify) {
    const auto e = run("eval '[[3,0]]'");
    EXPECT_EQ(e.code, 0);
    EXPECT_NE(e.out.find("\"1/3+0/1 i\""), std::string::npos) << e.out;
    const auto c = run("classify 1 1");
    EXPECT_EQ(c.code, 0);
    EXPECT_NE(c.out.find("exceptional"), std::string::npos);
    EXPECT_NE(run("classify 3 0").out.find("regular"), std::string::npos);
}

TEST(Cli, UsageParseAndDomainErrorsExitTwo) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("expand 'x+y i'").code, 2);
    EXPECT_EQ(run("expand '1/2+0/1 i'").code, 2);  // outside the half-open box
    EXPECT_EQ(run("eval '[[1,0],[-1,0]]'").code, 2);      // pole
    EXPECT_EQ(run("pressure --alphabet 'list:1,1' -n 2").code, 2);
    EXPECT_EQ(run("verify nonsense").code, 2);
    EXPECT_EQ(run("--config /nonexistent.cfg verify arith").code, 2);
}

TEST(Cli, BudgetExhaustionExitsThree) {
    EXPECT_EQ(run("pressure --alphabet 'list:2,2;3,0' -n 30 -s 1").code, 3);
}

TEST(Cli, VerifySuitesPass) {
    const auto r = run("verify arith");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"passed\": true"), std::string::npos);
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
    const std::string cmds[] = {
        "expand '1234/6789-1/77 i'",
        "--format csv pressure --alphabet 'list:2,2;-2,-2;3,0;0,3' -n 4 -s 0.5 -s 1",
        "dim --alphabet 'list:2,2;-2,-2' --n-max 6",
        "--format csv tau --set D2 --horizon 5000",
        "tessellate --norm-max 8",
    };
    int i = 0;
    for (const auto& c : cmds) {
        const std::string a = tmp("a" + std::to_string(i)), b = tmp("b" + std::to_string(i));
        ++i;
        ASSERT_EQ(run("--out " + a + " " + c).code, 0) << c;
        ASSERT_EQ(run("--out " + b + " " + c).code, 0) << c;
        const std::string ta = slurp(a);
        EXPECT_FALSE(ta.empty()) << c;
        EXPECT_EQ(ta, slurp(b)) << c;
        EXPECT_EQ(ta, run(c).out) << c;
        std::remove(a.c_str());
        std::remove(b.c_str());
    }
}

TEST(Cli, ScheduleWritesItsSubexpTrajectory) {
    const std::string cfg = tmp("sched.cfg"), csv = tmp("sub.csv");
    {
        std::ofstream(cfg) << "horizon = 300\n";
    }
    const auto r = run("--config " + cfg + " schedule --set D2 --f 'n+3' --eps 0.5 --delta 0.1 --chain 290 --subexp " + csv);
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"validation\""), std::string::npos);
    const std::string text = slurp(csv);
    EXPECT_EQ(text.rfind("n,log_card_over_n\n", 0), 0u);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 301);
    std::remove(cfg.c_str());
    std::remove(csv.c_str());
}
