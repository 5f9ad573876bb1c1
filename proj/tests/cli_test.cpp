#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "selfcq/atm.hpp"
#include "selfcq/cli.hpp"
#include "selfcq/io.hpp"

using namespace selfcq;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("selfcq_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                           "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    static std::string machine(const std::string& name) { return std::string(SELFCQ_MACHINES) + "/" + name; }

    fs::path dir_;
};

}  // namespace

TEST_F(Cli, Oracle) {
    EXPECT_EQ(cli({"oracle", "--atm", machine("m_acc.atm.json")}).out, "accepting\n");
    EXPECT_EQ(cli({"oracle", "--atm", machine("m_acc.atm.json")}).code, 0);
    const Outcome r = cli({"oracle", "--atm", machine("m_rej.atm.json")});
    EXPECT_EQ(r.out, "rejecting\n");
    EXPECT_EQ(r.code, 1);
}

TEST_F(Cli, CompileCheckEval) {
    const Outcome c = cli({"compile", "--atm", machine("m_acc.atm.json"), "--out-kb", path("k.kb.dl"), "--out-query",
                       path("q.cq")});
    ASSERT_EQ(c.code, 0) << c.err;
    EXPECT_NE(c.out.find("kb.axioms=141\n"), std::string::npos);
    EXPECT_NE(c.out.find("query.atoms=57\n"), std::string::npos);
    EXPECT_EQ(cli({"compile", "--atm", machine("m_acc.atm.json"), "--out-kb", path("k.kb.dl"), "--out-query",
                   path("q.cq")}).out,
              c.out);

    ASSERT_EQ(cli({"witness", "--atm", machine("m_acc.atm.json"), "--kind", "qct", "--out", path("q.interp.json")}).code, 0);
    const Outcome chk = cli({"check", "--interp", path("q.interp.json"), "--kb", path("k.kb.dl")});
    EXPECT_EQ(chk.code, 0);
    EXPECT_NE(chk.out.find("axioms=141 failing=0\n"), std::string::npos);

    const Outcome none = cli({"eval", "--interp", path("q.interp.json"), "--query", path("q.cq"), "--exists"});
    EXPECT_EQ(none.out, "false\n");
    EXPECT_EQ(none.code, 1);

    ASSERT_EQ(cli({"witness", "--atm", machine("m_acc.atm.json"), "--kind", "qct", "--fault", "0,1", "--out",
                   path("f.interp.json")}).code,
              0);
    const Outcome hit = cli({"eval", "--interp", path("f.interp.json"), "--query", path("q.cq"), "--exists"});
    EXPECT_EQ(hit.out, "true\n");
    EXPECT_EQ(hit.code, 0);
    EXPECT_EQ(cli({"eval", "--interp", path("f.interp.json"), "--query", path("q.cq")}).out, "\"#10\"\t\"0#10\"\n");
    EXPECT_EQ(cli({"check", "--interp", path("f.interp.json"), "--kb", path("k.kb.dl")}).code, 0);
}

TEST_F(Cli, TboxOnlyAndOwl) {
    ASSERT_EQ(cli({"compile", "--atm", machine("m_acc.atm.json"), "--out-kb", path("k.kb.dl"), "--out-query",
                   path("q.cq"), "--tbox-only"}).code,
              0);
    ASSERT_EQ(cli({"witness", "--atm", machine("m_acc.atm.json"), "--kind", "qct", "--tbox-only", "--out",
                   path("q.interp.json")}).code,
              0);
    EXPECT_EQ(cli({"check", "--interp", path("q.interp.json"), "--kb", path("k.kb.dl")}).code, 0);

    ASSERT_EQ(cli({"compile", "--atm", machine("m_acc.atm.json"), "--out-kb", path("k.kb.ofn"), "--out-query",
                   path("q.cq"), "--format", "owlfs"}).code,
              0);
    EXPECT_NE(read_file(path("k.kb.ofn")).find("ObjectHasSelf(:next)"), std::string::npos);
    EXPECT_EQ(cli({"check", "--interp", path("q.interp.json"), "--kb", path("k.kb.ofn")}).code, 2);
}

TEST_F(Cli, WitnessKinds) {
    for (const std::string kind : {"unit", "conf", "enr"}) {
        const Outcome r = cli({"witness", "--atm", machine("m_acc.atm.json"), "--kind", kind, "--out", path(kind + ".json")});
        EXPECT_EQ(r.code, 0) << kind << r.err;
        EXPECT_EQ(r.out, "elements=7\n");
    }
    EXPECT_EQ(cli({"witness", "--kind", "unit", "--n", "1", "--out", path("u.json")}).out, "elements=3\n");
    EXPECT_EQ(cli({"witness", "--atm", machine("m_acc.atm.json"), "--kind", "conf", "--config", "e1:10:1", "--out",
                   path("c.json")}).code,
              0);
    EXPECT_TRUE(parse_interp(read_file(path("c.json"))).in_concept("Let_1", "0"));
}

TEST_F(Cli, Errors) {
    EXPECT_EQ(cli({}).code, 2);
    EXPECT_EQ(cli({"oracle"}).code, 2);
    EXPECT_EQ(cli({"frobnicate"}).code, 2);
    EXPECT_EQ(cli({"oracle", "--atm", path("missing.json")}).code, 2);
    write_file(path("bad.json"), "{\"n\": 1}");
    const Outcome bad = cli({"oracle", "--atm", path("bad.json")});
    EXPECT_EQ(bad.code, 2);
    EXPECT_TRUE(bad.out.empty());
    EXPECT_FALSE(bad.err.empty());
    EXPECT_EQ(cli({"witness", "--atm", machine("m_rej.atm.json"), "--kind", "qct", "--out", path("x.json")}).code, 2);
    EXPECT_EQ(cli({"witness", "--atm", machine("m_acc.atm.json"), "--kind", "qct", "--fault", "0,0", "--out",
                   path("x.json")}).code,
              2);
    EXPECT_EQ(cli({"witness", "--atm", machine("m_acc.atm.json"), "--kind", "conf", "--fault", "0,1", "--out",
                   path("x.json")}).code,
              2);
    EXPECT_EQ(cli({"compile", "--atm", machine("m_acc.atm.json"), "--out-kb", path("k"), "--out-query", path("q"),
                   "--format", "turtle"}).code,
              2);
}

TEST_F(Cli, BudgetExit) {
    RawAtm raw = to_raw(make_m_acc(1));
    for (auto& t : raw.delta)
        if (t.from == "e1") t.to = "s_init";
    write_file(path("loop.atm.json"), emit_atm(validate_atm(raw)));
    const Outcome r = cli({"oracle", "--atm", path("loop.atm.json")});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("halting assumption violated"), std::string::npos);
}

TEST_F(Cli, VerifyLemmas) {
    const Outcome r = cli({"verify-lemmas", "--n", "2"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 8);
    EXPECT_EQ(r.out.find("\tfail\t"), std::string::npos);
    EXPECT_EQ(cli({"verify-lemmas", "--n", "2"}).out, r.out);
}
