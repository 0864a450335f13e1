#include <gtest/gtest.h>

#include <filesystem>

#include "weldpath/fuzz.hpp"
#include "weldpath/io.hpp"

using namespace weldpath;
using nlohmann::json;

TEST(Io, PairsRoundTrip) {
  const PairSpec ps{{0, 3}, {4, 7}};
  const json j = pairs_to_json(ps);
  EXPECT_EQ(j, json::parse(R"({"pairs":[[0,3],[4,7]]})"));
  EXPECT_EQ(parse_pairs(j), ps);
}

TEST(Io, CoverRoundTrip) {
  const PathCover c{{0, 1, 2}, {5}};
  EXPECT_EQ(parse_cover(cover_to_json(c)), c);
}

TEST(Io, SchemaErrors) {
  EXPECT_THROW(parse_pairs(json::array()), ParseError);
  EXPECT_THROW(parse_pairs(json::parse(R"({"pairs":[[0]]})")), ParseError);
  EXPECT_THROW(parse_pairs(json::parse(R"({"pairs":[[0,-1]]})")), ParseError);
  EXPECT_THROW(parse_pairs(json::parse(R"({"pairs":[["a",1]]})")), ParseError);
  EXPECT_THROW(parse_cover(json::parse(R"({"paths":5})")), ParseError);
  EXPECT_THROW(parse_cover(json::parse(R"({"paths":[[1.5]]})")), ParseError);
}

TEST(Io, Files) {
  const auto dir = std::filesystem::temp_directory_path() / "weldpath_io_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "p.json").string();
  write_text_file(path, pairs_to_json(PairSpec{{1, 2}}).dump());
  EXPECT_EQ(parse_pairs(read_json_file(path)), (PairSpec{{1, 2}}));
  write_text_file(path, "{not json");
  EXPECT_THROW(read_json_file(path), ParseError);
  EXPECT_THROW(read_json_file((dir / "missing.json").string()), ParseError);
  EXPECT_THROW(write_text_file((dir / "no" / "such" / "x").string(), "x"), InputError);
  std::filesystem::remove_all(dir);
}

TEST(Fuzz, DeterministicAndClean) {
  for (const char* family : {"transposition", "kmm-weld", "mixed"}) {
    FuzzConfig cfg;
    cfg.family = family;
    cfg.instances = 300;
    cfg.seed = 9;
    const FuzzReport a = run_fuzz(cfg);
    const FuzzReport b = run_fuzz(cfg);
    EXPECT_EQ(a.to_json(), b.to_json()) << family;
    EXPECT_EQ(a.passed, 300u) << family;
    EXPECT_EQ(a.failed, 0u);
    EXPECT_EQ(a.counting_violations, 0u);
    std::size_t total = 0;
    for (const auto& [k, v] : a.histogram) total += v;
    EXPECT_EQ(total, 300u);
  }
}

TEST(Fuzz, PrefixStable) {
  // Instance i depends only on (seed, i), so a longer run extends a shorter one.
  FuzzConfig small;
  small.instances = 50;
  small.family = "mixed";
  FuzzConfig big = small;
  big.instances = 100;
  const auto a = run_fuzz(small);
  const auto b = run_fuzz(big);
  for (const auto& [k, v] : a.histogram) EXPECT_LE(v, b.histogram.at(k));
}

TEST(Fuzz, ConfigErrors) {
  FuzzConfig cfg;
  cfg.family = "grid";
  EXPECT_THROW(run_fuzz(cfg), InputError);
  cfg.family = "transposition";
  cfg.min_rank = 4;
  cfg.max_rank = 3;
  EXPECT_THROW(run_fuzz(cfg), InputError);
  cfg.min_rank = 1;
  cfg.max_rank = 3;
  EXPECT_THROW(run_fuzz(cfg), InputError);
}
