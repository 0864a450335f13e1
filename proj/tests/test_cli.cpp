#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("weldpath_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name) const { return (dir_ / name).string(); }

  // Runs the CLI with stdout sent to `out` (inside the temp dir).
  int run(const std::string& args, const std::string& out = "stdout.txt") const {
    const std::string cmd = std::string(WELDPATH_CLI) + " " + args + " > " + file(out) + " 2> " +
                            file("stderr.txt");
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string read(const std::string& name) const {
    std::ifstream in(file(name));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(file(name)) << text;
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, GenSolveVerify) {
  ASSERT_EQ(run("gen transposition 4 --out " + file("g.json")), 0);
  EXPECT_NE(read("stdout.txt").find("rank 4 vertices 24 edges 72 equitable yes"), std::string::npos);
  write("p.json", R"({"pairs":[[0,1],[3,2],[4,5]]})");
  ASSERT_EQ(run("solve --graph " + file("g.json") + " --pairs " + file("p.json") + " --out " +
                file("c.json") + " --trace " + file("t.json")),
            0);
  EXPECT_EQ(json::parse(read("t.json"))["routine"], "rank4-small");
  EXPECT_EQ(run("verify --graph " + file("g.json") + " --pairs " + file("p.json") + " --cover " +
                file("c.json")),
            0);
  EXPECT_EQ(json::parse(read("stdout.txt"))["accepted"], true);

  write("bad.json", R"({"paths":[[0,1],[3,2],[4,5]]})");
  EXPECT_EQ(run("verify --graph " + file("g.json") + " --pairs " + file("p.json") + " --cover " +
                file("bad.json")),
            1);
  EXPECT_EQ(json::parse(read("stdout.txt"))["accepted"], false);
}

TEST_F(Cli, ExitCodes) {
  ASSERT_EQ(run("gen transposition 4 --out " + file("g.json")), 0);
  write("two.json", R"({"pairs":[[0,1],[3,2]]})");
  EXPECT_EQ(run("solve --graph " + file("g.json") + " --pairs " + file("two.json")), 3);
  write("white.json", R"({"pairs":[[1,0],[3,2],[4,5]]})");
  EXPECT_EQ(run("solve --graph " + file("g.json") + " --pairs " + file("white.json")), 3);
  EXPECT_EQ(run("solve --graph " + file("missing.json") + " --pairs " + file("two.json")), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("gen transposition 0"), 2);

  // A weld with too few layers fails the hypotheses; the report is printed.
  ASSERT_EQ(run("gen transposition 2 --out " + file("k2.json")), 0);
  json k2 = json::parse(read("k2.json"));
  json node = {{"rank", 3}, {"children", {k2, k2}}, {"matchings", {{"0-1", {1, 0}}}}};
  write("few.json", node.dump());
  write("one.json", R"({"pairs":[[0,1],[2,3]]})");
  EXPECT_EQ(run("solve --graph " + file("few.json") + " --pairs " + file("one.json")), 3);
}

TEST_F(Cli, GenIsDeterministicAndRoundTrips) {
  ASSERT_EQ(run("gen kmm-weld --rank 3 --m 2 --layers 3 --seed 4", "a.json"), 0);
  ASSERT_EQ(run("gen kmm-weld --rank 3 --m 2 --layers 3 --seed 4", "b.json"), 0);
  EXPECT_EQ(read("a.json"), read("b.json"));
  ASSERT_EQ(run("gen custom --spec " + file("a.json"), "c.json"), 0);
  EXPECT_EQ(json::parse(read("a.json")), json::parse(read("c.json")));
  ASSERT_EQ(run("gen transposition 1 --dot " + file("g.dot"), "one.json"), 0);
  EXPECT_EQ(json::parse(read("one.json"))["rank"], 1);
  EXPECT_NE(read("g.dot").find("graph"), std::string::npos);
}

TEST_F(Cli, OracleAndFuzz) {
  write("c6.json", R"({"rank":1,"colors":["black","white","black","white","black","white"],
    "edges":[[0,1],[1,2],[2,3],[3,4],[4,5],[5,0]],"mode":"laceable"})");
  write("anti.json", R"({"pairs":[[0,3]]})");
  EXPECT_EQ(run("oracle --graph " + file("c6.json") + " --pairs " + file("anti.json")), 0);
  EXPECT_NE(read("stdout.txt").find("NONE"), std::string::npos);
  write("adj.json", R"({"pairs":[[0,5]]})");
  EXPECT_EQ(run("oracle --graph " + file("c6.json") + " --pairs " + file("adj.json")), 0);

  ASSERT_EQ(run("fuzz --family mixed --instances 200 --seed 3 --json", "f1.json"), 0);
  ASSERT_EQ(run("fuzz --family mixed --instances 200 --seed 3 --json", "f2.json"), 0);
  EXPECT_EQ(read("f1.json"), read("f2.json"));
  EXPECT_EQ(json::parse(read("f1.json"))["failed"], 0);
}
