#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lshape/errors.hpp"
#include "lshape/experiment/cache.hpp"
#include "lshape/experiment/commands.hpp"
#include "lshape/experiment/config.hpp"
#include "lshape/experiment/records.hpp"

using namespace lshape;
using namespace lshape::experiment;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("lshape_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST(Parsing, Sweeps) {
  EXPECT_EQ(parse_power_sweep("4..6"), (std::vector<int>{16, 32, 64}));
  EXPECT_EQ(parse_int_list("3, 8,100"), (std::vector<int>{3, 8, 100}));
  EXPECT_EQ(parse_double_list("1.5,2"), (std::vector<double>{1.5, 2.0}));
  EXPECT_THROW((void)parse_power_sweep("6..4"), std::exception);
  EXPECT_THROW((void)parse_int_list("3,x"), std::exception);
  EXPECT_EQ(parse_rho("n"), RhoConvention::kOneOverN);
  EXPECT_EQ(parse_rho("n+1"), RhoConvention::kOneOverNPlusOne);
  EXPECT_STREQ(rho_name(RhoConvention::kOneOverN), "n");
}

TEST(Hashing, KnownValues) {
  EXPECT_EQ(fnv1a(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(hex64(0xabcULL), "0000000000000abc");
}

TEST(Records, JsonRoundTrip) {
  MetricRecord r;
  r.metric = "lebesgue";
  r.n = 32;
  r.family = "adjusted";
  r.p = 2.0;
  r.value = 0.1 + 0.2;
  r.location = -1.25;
  r.settings["grid_per_gap"] = "64";
  const MetricRecord back = record_from_json(to_json(r));
  EXPECT_EQ(back.metric, r.metric);
  EXPECT_EQ(back.n, r.n);
  EXPECT_EQ(back.value, r.value);
  EXPECT_EQ(back.location, r.location);
  EXPECT_EQ(back.p, r.p);
  EXPECT_EQ(back.settings, r.settings);
  EXPECT_EQ(fixed6(3.9891749), "3.989175");
  EXPECT_EQ(format_exact(0.1), "0.1");
}

TEST(Cache, RoundTripAndCorruption) {
  const fs::path dir = scratch_dir("cache");
  ResultCache cache(dir.string());
  ASSERT_TRUE(cache.enabled());
  const nlohmann::json key = {{"n", 16}, {"metric", "lebesgue"}};
  EXPECT_FALSE(cache.load(key).has_value());
  cache.store(key, nlohmann::json{{"value", 4.5}});
  ASSERT_TRUE(cache.load(key).has_value());
  EXPECT_EQ((*cache.load(key))["value"], 4.5);

  const nlohmann::json other = {{"n", 17}, {"metric", "lebesgue"}};
  EXPECT_FALSE(cache.load(other).has_value());

  for (const auto& e : fs::directory_iterator(dir)) std::ofstream(e.path()) << "{not json";
  EXPECT_FALSE(cache.load(key).has_value());
  EXPECT_FALSE(ResultCache("").enabled());
}

TEST(Commands, CsvIsIndependentOfJobs) {
  RunConfig c;
  c.command = "lebesgue";
  c.ns = {8, 16, 24, 33};
  c.family = FamilyKind::kAdjusted;
  std::ostringstream a;
  std::ostringstream b;
  c.jobs = 1;
  ASSERT_EQ(cmd_lebesgue(c, a), 0);
  c.jobs = 2;
  ASSERT_EQ(cmd_lebesgue(c, b), 0);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str().substr(0, a.str().find('\n')),
            "n,family,L_n,L_over_log,argmax_t,grid_per_gap,refine_tol");
}

TEST(Commands, CacheHitGivesIdenticalOutput) {
  const fs::path dir = scratch_dir("cmd_cache");
  RunConfig c;
  c.command = "minmax";
  c.ns = {16, 20};
  c.cache_dir = dir.string();
  std::ostringstream a;
  std::ostringstream b;
  ASSERT_EQ(cmd_minmax(c, a), 0);
  EXPECT_FALSE(fs::is_empty(dir));
  ASSERT_EQ(cmd_minmax(c, b), 0);
  EXPECT_EQ(a.str(), b.str());
}

TEST(Commands, FitFromCsv) {
  const fs::path dir = scratch_dir("fit");
  const fs::path csv = dir / "in.csv";
  {
    std::ofstream f(csv);
    f << "n,family,L_n,L_over_log,argmax_t,grid_per_gap,refine_tol\n";
    for (int e = 4; e <= 10; ++e) {
      const double n = std::ldexp(1.0, e);
      f << static_cast<int>(n) << ",raw," << std::log(n) * (1.0 + 0.1 * std::log(n)) << ",0,0,64,1e-10\n";
    }
  }
  RunConfig c;
  c.command = "fit";
  c.input = csv.string();
  std::ostringstream out;
  ASSERT_EQ(cmd_fit(c, out), 0);
  const auto j = nlohmann::json::parse(out.str());
  EXPECT_NEAR(j["a"].get<double>(), 1.0, 1e-3);
  EXPECT_NEAR(j["b"].get<double>(), 0.1, 1e-3);
}

TEST(Commands, NodesJson) {
  RunConfig c;
  c.command = "nodes";
  c.ns = {32};
  c.family = FamilyKind::kAdjusted;
  std::ostringstream out;
  ASSERT_EQ(cmd_nodes(c, out), 0);
  const auto j = nlohmann::json::parse(out.str());
  EXPECT_FALSE(j.dump().empty());
}

TEST(Verify, QuickPassesAndFlipFails) {
  std::ostringstream good;
  EXPECT_EQ(cmd_verify({}, good), 0) << good.str();
  VerifyOptions flip;
  flip.flip_branch = true;
  std::ostringstream bad;
  EXPECT_NE(cmd_verify(flip, bad), 0);
  EXPECT_NE(bad.str().find("FAIL"), std::string::npos);
}
