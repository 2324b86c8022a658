#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lec/errors.hpp"
#include "lec/cli.hpp"
#include "lec/exact_oracle.hpp"

using namespace lec;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("lec-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const auto p = (dir_ / name).string();
    std::ofstream(p) << text;
    return p;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string graph(const Graph& g, const std::string& name = "g.txt") {
    return file(name, serialize_graph(g));
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, ColourEdgesUniform) {
  const auto g = graph(complete_graph(4));
  const CliRun r = run({"colour-edges", g, "--uniform", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = parse_json(r.out);
  EXPECT_EQ(j["edge_colours"].size(), 6u);
  EXPECT_TRUE(j["vertex_colours"].is_null());
  EXPECT_TRUE(j["stats"].is_object());
  // Round trip through the colouring reader and the checker.
  const auto col = colouring_from_json(j);
  EXPECT_FALSE(check_edge_colouring(complete_graph(4), uniform_lists(complete_graph(4), 5), col.edge_colours));
}

TEST_F(CliTest, ColourEdgesForcedDeltaPlusOne) {
  const auto g = graph(complete_graph(4));
  const CliRun r = run({"colour-edges", g, "--uniform", "3", "--force", "--repro", path("r.json")});
  EXPECT_EQ(list_edge_colourable(complete_graph(4), uniform_lists(complete_graph(4), 3)).verdict, Verdict::yes);
  EXPECT_TRUE(r.code == 0 || r.code == 2);
  if (r.code == 2) {
    EXPECT_TRUE(fs::exists(path("r.json")));
  }
}

TEST_F(CliTest, ShortListsWithoutForceAreInputErrors) {
  const auto g = graph(complete_graph(4));
  EXPECT_EQ(run({"colour-edges", g, "--uniform", "3"}).code, 1);
}

TEST_F(CliTest, FailureWritesReproductionBundle) {
  const auto g = graph(complete_graph(3));
  const CliRun r = run({"colour-edges", g, "--uniform", "2", "--force", "--repro", path("bundle.json")});
  EXPECT_EQ(r.code, 2);
  std::ifstream in(path("bundle.json"));
  std::stringstream ss;
  ss << in.rdbuf();
  const Json j = parse_json(ss.str());
  EXPECT_EQ(j["graph"], serialize_graph(complete_graph(3)));
  EXPECT_FALSE(j["trace"].empty());
}

TEST_F(CliTest, MissingFile) {
  const CliRun r = run({"colour-edges", path("nope.txt"), "--uniform", "5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("nope.txt"), std::string::npos);
}

TEST_F(CliTest, ParseErrorNamesFileAndLine) {
  const auto g = file("bad.txt", "3 2\n0 1\n1 1\n");
  const CliRun r = run({"exact", g});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("bad.txt: line 3"), std::string::npos) << r.err;
}

TEST_F(CliTest, UnknownSubcommand) { EXPECT_EQ(run({"frobnicate"}).code, 1); }

TEST_F(CliTest, ListsFileAndTrace) {
  const Graph k5 = complete_graph(5);
  const auto g = graph(k5);
  const auto lists = file("l.json", dump_json(lists_to_json(uniform_lists(k5, 6))));
  const CliRun r = run({"colour-edges", g, "--lists", lists, "--trace", path("t.txt"), "--dot", path("p.dot")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(path("t.txt")));
  EXPECT_TRUE(fs::exists(path("p.dot")));
}

TEST_F(CliTest, ColourTotal) {
  const auto g = graph(complete_graph(3));
  const CliRun r = run({"colour-total", g, "--palette", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = parse_json(r.out);
  EXPECT_EQ(j["vertex_colours"].size(), 3u);
  const auto col = file("c.json", r.out);
  EXPECT_EQ(run({"verify", g, col}).code, 0);
  EXPECT_EQ(run({"colour-total", g, "--palette", "5"}).code, 1);
}

TEST_F(CliTest, VerifyTampered) {
  const auto g = graph(complete_graph(4));
  const CliRun r = run({"colour-edges", g, "--uniform", "5"});
  ASSERT_EQ(r.code, 0);
  Json j = parse_json(r.out);
  j["edge_colours"][1] = j["edge_colours"][0];
  const auto col = file("c.json", dump_json(j));
  const auto lists = file("l.json", dump_json(lists_to_json(uniform_lists(complete_graph(4), 5))));
  const CliRun v = run({"verify", g, col, "--lists", lists});
  EXPECT_EQ(v.code, 2);
  const Json out = parse_json(v.out);
  EXPECT_FALSE(out["ok"].get<bool>());
  EXPECT_EQ(out["violation"]["clause"], "incident-edges");
  EXPECT_EQ(out["violation"]["vertices"], Json::array({0}));
}

TEST_F(CliTest, Exact) {
  const auto g = graph(cycle_graph(5));
  const CliRun r = run({"exact", g});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = parse_json(r.out);
  EXPECT_EQ(j["chi_prime"], 3);
  EXPECT_EQ(j["chi_prime_2"], 1);
  EXPECT_EQ(j["alpha_prime"], 2);
  EXPECT_EQ(j["alpha_T"], 3);
  const CliRun big = run({"exact", graph(complete_graph(8), "k8.txt")});
  ASSERT_EQ(big.code, 0);
  EXPECT_EQ(parse_json(big.out)["chi_prime"]["error"], "guard exceeded");
}

TEST_F(CliTest, Hall) {
  const auto g = graph(cycle_graph(5));
  const CliRun r = run({"hall", "--edge", g, "--via-lists"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = parse_json(r.out);
  EXPECT_EQ(j["value"], 3);
  EXPECT_EQ(j["witness"], Json::array({0, 1, 2, 3, 4}));
  EXPECT_EQ(j["via_lists"], 3);
  EXPECT_EQ(hall_report_from_json(j).value, 3u);
  const CliRun t = run({"hall", "--total", g});
  ASSERT_EQ(t.code, 0);
  const auto lists = file("l.json", dump_json(lists_to_json(uniform_lists(cycle_graph(5), 2))));
  const CliRun c = run({"hall", "--check", lists, g});
  ASSERT_EQ(c.code, 0);
  EXPECT_FALSE(parse_json(c.out)["satisfied"].get<bool>());
  EXPECT_EQ(run({"hall", g}).code, 1);
}

TEST_F(CliTest, GenRoundTrip) {
  const CliRun r = run({"gen", "--kind", "random", "-n", "12", "--p", "0.3", "--seed", "4", "--lists-out",
                     path("l.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Graph g = parse_graph(r.out);
  EXPECT_EQ(g, random_graph(12, 0.3, 4));
  const auto g_file = file("g.txt", r.out);
  EXPECT_EQ(run({"colour-edges", g_file, "--lists", path("l.json")}).code, 0);
  EXPECT_EQ(run({"gen", "--kind", "petersen"}).out, serialize_graph(petersen_graph()));
  EXPECT_EQ(run({"gen", "--kind", "blob"}).code, 1);
}

TEST_F(CliTest, FuzzSummaryAndExitCodes) {
  const CliRun ok = run({"fuzz", "--trials", "40", "--n-max", "12", "--offset", "2"});
  EXPECT_EQ(ok.code, 0) << ok.out;
  EXPECT_EQ(parse_json(ok.out)["successes"], 40);
  const CliRun tight = run({"fuzz", "--trials", "40", "--n-max", "8", "--offset", "0"});
  EXPECT_EQ(tight.code, 0) << "failures below Δ+2 are reported, not errors";
  const CliRun broken = run({"fuzz", "--trials", "10", "--n-max", "8", "--offset", "2", "--inject-fault"});
  EXPECT_EQ(broken.code, 2);
  EXPECT_GT(parse_json(broken.out)["checker_failures"].get<int>(), 0);
}

TEST_F(CliTest, FuzzIndependentOfJobs) {
  FuzzConfig c;
  c.trials = 60;
  c.n_max = 15;
  c.seed = 9;
  c.oracle_rate = 0.5;
  const Json one = fuzz_summary_to_json(c, run_fuzz(c));
  c.jobs = 4;
  EXPECT_EQ(fuzz_summary_to_json(c, run_fuzz(c)), one);
}

TEST_F(CliTest, ListsJsonRoundTrip) {
  const Graph g = random_graph(8, 0.5, 2);
  const auto t = random_total_lists(g, 5, 9, 2);
  const auto back = lists_from_json(parse_json(dump_json(lists_to_json(t))));
  EXPECT_EQ(back.edge_lists, t.edge_lists);
  ASSERT_TRUE(back.vertex_lists);
  EXPECT_EQ(*back.vertex_lists, t.vertex_lists);
  EXPECT_THROW(lists_from_json(parse_json("{\"edge_lists\": 3}")), ParseError);
  try {
    parse_json("{\n\"a\": 1,\n}\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}
