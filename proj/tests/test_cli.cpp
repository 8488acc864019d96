#include <gtest/gtest.h>

#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "corpus.hpp"
#include "pcube/cli.hpp"
#include "pcube/io.hpp"

using namespace pcube;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("pcube_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    write_text_file(path(name), text);
    return path(name);
  }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(CliTest, ConstructPaleyMatchesD5) {
  const Outcome o = run({"construct", "paley", "--q", "7", "--alpha", "3", "--out", path("d5.nds")});
  EXPECT_EQ(o.code, kExitOk);
  const DiffsetFile f = read_diffset(read_text_file(path("d5.nds")));
  EXPECT_EQ(f.diffset.tuples, corpus::D5().tuples);
  EXPECT_EQ(run({"verify", path("d5.nds")}).code, kExitOk);
}

TEST_F(CliTest, ConstructRejectsBadParameters) {
  const Outcome o = run({"construct", "paley", "--q", "5"});
  EXPECT_EQ(o.code, kExitUsage);
  EXPECT_NE(o.err.find("3 mod 4"), std::string::npos);
  EXPECT_EQ(run({"construct", "lift", "--group", "Z7", "--set", "0,1,2"}).code, kExitUsage);
}

TEST_F(CliTest, ConstructTwinPrimePower) {
  EXPECT_EQ(run({"construct", "tpp", "--q", "3", "--out", path("t.nds")}).code, kExitOk);
  const DiffsetFile f = read_diffset(read_text_file(path("t.nds")));
  EXPECT_EQ(f.group.order(), 15);
  EXPECT_EQ(f.diffset.n, 3);
  EXPECT_EQ(f.diffset.k, 7);
  EXPECT_EQ(run({"verify", path("t.nds")}).code, kExitOk);
}

TEST_F(CliTest, LiftOrdinarySet) {
  const Outcome o = run({"construct", "lift", "--group", "Z7", "--set", "1,2,4"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_EQ(read_diffset(o.out).diffset.tuples, (std::vector<Row>{{0, 1}, {0, 2}, {0, 4}}));
}

TEST_F(CliTest, VerifyCubes) {
  EXPECT_EQ(run({"verify", write("c1.oa", corpus::kC1)}).code, kExitOk);
  std::string broken = corpus::kC1;
  broken.replace(broken.find("7 5 2"), 5, "7 5 3");
  const Outcome o = run({"verify", write("bad.oa", broken)});
  EXPECT_EQ(o.code, kExitFalse);
  EXPECT_NE(o.out.find("fail"), std::string::npos);
  EXPECT_EQ(run({"verify", write("junk.oa", "pcube v=3\n1 2\n")}).code, kExitUsage);
  EXPECT_EQ(run({"verify", path("missing.oa")}).code, kExitUsage);
}

TEST_F(CliTest, DevelopThenEquivalent) {
  const std::string d1 = write("d1.nds", write_diffset(cyclic_group(7), corpus::D1()));
  EXPECT_EQ(run({"develop", d1, "--out", path("d1.oa")}).code, kExitOk);
  const std::string c1 = write("c1.oa", corpus::kC1);
  const Outcome o = run({"equiv", path("d1.oa"), c1});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_NE(o.out.find("witness"), std::string::npos);
  const std::string c3 = write("c3.oa", corpus::kC3);
  EXPECT_EQ(run({"equiv", c1, c3}).code, kExitFalse);
  EXPECT_EQ(run({"equiv", c1, write("c2.oa", corpus::kC2), "--isotopy"}).code, kExitFalse);
  EXPECT_EQ(run({"equiv", c1, write("c5.oa", corpus::kC5)}).code, kExitUsage);
}

TEST_F(CliTest, BoundsAndProject) {
  const Outcome b = run({"bounds", "--v", "7", "--k", "3"});
  EXPECT_EQ(b.code, kExitOk);
  EXPECT_EQ(b.out, "triangular=28\ndistance=10\n");
  const Outcome p = run({"project", write("c1.oa", corpus::kC1), "--x", "1", "--y", "2"});
  EXPECT_EQ(p.code, kExitOk);
  EXPECT_NE(p.out.find("symmetric_design=yes"), std::string::npos);
  EXPECT_EQ(run({"project", path("c1.oa"), "--x", "2", "--y", "2"}).code, kExitUsage);
}

TEST_F(CliTest, CanonAndAut) {
  const std::string c1 = write("c1.oa", corpus::kC1);
  const Outcome c = run({"canon", c1});
  EXPECT_EQ(c.code, kExitOk);
  EXPECT_NE(c.out.find("apar_order=63"), std::string::npos);
  const Outcome c2 = run({"canon", write("c2.oa", corpus::kC2)});
  // Paratopic cubes print the same canonical cube.
  EXPECT_EQ(c.out, c2.out);
  const Outcome a = run({"aut", write("c3.oa", corpus::kC3)});
  EXPECT_NE(a.out.find("apar_order=42"), std::string::npos);
}

TEST_F(CliTest, ClassifyReportsPerDimension) {
  const Outcome o = run({"classify", "--group", "Z7", "--k", "3", "--lambda", "1", "--emit", path("out")});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_EQ(o.out, "n=2 classes=1\nn=3 classes=2\nn=4 classes=2\nn=5 classes=1\nn=6 classes=1\nn=7 classes=1\n"
                   "n=8 classes=0\nmu=7\n");
  EXPECT_TRUE(std::filesystem::exists(path("out/Z7_7_3_1_n7_0001.oa")));
  EXPECT_EQ(run({"verify", path("out/Z7_7_3_1_n3_0002.nds")}).code, kExitOk);
  const Outcome capped = run({"classify", "--group", "Z7", "--k", "3", "--lambda", "1", "--max-dim", "4"});
  EXPECT_NE(capped.out.find("mu>=4"), std::string::npos);
}

TEST_F(CliTest, ClassifyWithGroupFile) {
  const std::string g = write("g.grp", write_group(group_from_name("Z7sZ3")));
  const Outcome o = run({"--format", "json", "classify", "--group-file", g, "--k", "5", "--lambda", "1", "--max-dim", "2"});
  ASSERT_EQ(o.code, kExitOk);
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["v"], 21);
  EXPECT_EQ(j["complete"], false);
}

TEST_F(CliTest, EnumerateCensus) {
  const Outcome o = run({"enumerate", "--group", "SG16_6", "--k", "6", "--lambda", "2"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_EQ(o.out, "tds=64\nnds=2\n");
}

TEST_F(CliTest, KramerMesnerWithActionFile) {
  ActionFile a{7, 3, {}};
  Permutation s(7);
  for (int i = 0; i < 7; ++i) s[i] = (i + 1) % 7;
  a.generators.push_back(Isotopy{{s, s, s}});
  const std::string action = write("z7.act", write_action(a));
  const Outcome o = run({"km-search", "--v", "7", "--k", "3", "--lambda", "1", "--n", "3", "--action", action});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_EQ(o.out.rfind("classes=2\n", 0), 0u);
  const Outcome t = run({"km-search", "--v", "3", "--k", "2", "--lambda", "1", "--n", "3"});
  EXPECT_EQ(t.out.rfind("classes=2\n", 0), 0u);
  EXPECT_EQ(run({"km-search", "--v", "7", "--k", "3", "--lambda", "1", "--n", "4", "--action", action}).code,
            kExitUsage);
}

TEST_F(CliTest, TableOneAgainstReference) {
  const Outcome o = run({"tables", "--table", "1", "--expected"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_NE(o.out.find("#: 1 2 1 1 0"), std::string::npos);
  EXPECT_NE(o.out.find("expected: ok"), std::string::npos);
}

TEST_F(CliTest, JsonOutputParses) {
  const Outcome o = run({"--format", "json", "bounds", "--v", "7", "--k", "3"});
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["triangular"], 28);
  EXPECT_EQ(j["distance"], 10);
  const Outcome v = run({"--format", "json", "verify", write("c4.oa", corpus::kC4)});
  EXPECT_EQ(nlohmann::json::parse(v.out)["ok"], true);
}

TEST_F(CliTest, OutputIsDeterministic) {
  const std::string c5 = write("c5.oa", corpus::kC5);
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"canon", c5}, {"aut", c5}, {"classify", "--group", "Z7", "--k", "4", "--lambda", "2"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"bounds", "--v", "7"}).code, kExitUsage);
  EXPECT_EQ(run({"--format", "xml", "bounds", "--v", "7", "--k", "3"}).code, kExitUsage);
  EXPECT_EQ(run({"classify", "--k", "3", "--lambda", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"tables", "--table", "9"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}
