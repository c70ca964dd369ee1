#include "edmsphere/cli.hpp"

#include <cmath>
#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "edmsphere/matrix_io.hpp"

namespace edmsphere {
namespace {

using nlohmann::json;

std::string fixture(const char* name) { return std::string(EDMSPHERE_FIXTURE_DIR) + "/" + name; }

struct Run {
  int code = 0;
  json report;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "edmsphere");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  if (!r.out.empty() && r.out.front() == '{') r.report = json::parse(r.out);
  return r;
}

void expect_schema(const json& j) {
  for (const char* key : {"command", "inputs", "tolerances", "result", "verification", "exit_code", "wall_time_s"})
    EXPECT_TRUE(j.contains(key)) << key;
}

TEST(CliValidate, UnitSimplex) {
  const auto r = run({"validate", fixture("unit_simplex3.txt")});
  EXPECT_EQ(r.code, cli::kExitOk);
  expect_schema(r.report);
  const auto& res = r.report["result"];
  EXPECT_TRUE(res["is_edm"].get<bool>());
  EXPECT_EQ(res["embedding_dim"], 2);
  EXPECT_NEAR(res["radius"].get<double>(), 1.0, 1e-12);
  EXPECT_TRUE(res["unit_spherical"].get<bool>());
  EXPECT_TRUE(res["delta_nonnegative"].get<bool>());
  EXPECT_EQ(r.report["inputs"][0]["sha256"].get<std::string>().size(), 64u);
}

TEST(CliValidate, CrosspolytopeAndJson) {
  const auto cp = run({"validate", fixture("crosspolytope2.txt")});
  EXPECT_EQ(cp.report["result"]["embedding_dim"], 2);
  EXPECT_TRUE(cp.report["result"]["unit_spherical"].get<bool>());
  const auto js = run({"validate", fixture("triangle.json")});
  EXPECT_EQ(js.code, 0);
  EXPECT_FALSE(js.report["result"]["unit_spherical"].get<bool>());
  EXPECT_TRUE(js.report["result"].contains("unit_sphere_note"));
}

TEST(CliValidate, RejectionsAndFaults) {
  const auto neg = run({"validate", fixture("negative.txt")});
  EXPECT_EQ(neg.code, cli::kExitRejected);
  EXPECT_EQ(neg.report["result"]["rejection"]["reason"], "negative-entry");
  EXPECT_FALSE(neg.err.empty());

  const auto bad = run({"validate", fixture("malformed.txt")});
  EXPECT_EQ(bad.code, cli::kExitFault);
  EXPECT_EQ(bad.report["result"]["error"]["line"], 3);

  const auto missing = run({"validate", fixture("does_not_exist.txt")});
  EXPECT_EQ(missing.code, cli::kExitFault);
}

TEST(CliOrthorep, Examples) {
  const auto ex = run({"orthorep", fixture("example5.graph")});
  ASSERT_EQ(ex.code, 0) << ex.err;
  EXPECT_EQ(ex.report["result"]["d"], 3);
  EXPECT_EQ(ex.report["result"]["k"], 2);
  EXPECT_TRUE(ex.report["verification"]["minimality_tight"].get<bool>());
  EXPECT_EQ(run({"orthorep", fixture("single_edge.graph")}).report["result"]["d"], 1);
  EXPECT_EQ(run({"orthorep", fixture("triangle.graph")}).report["result"]["d"], 2);

  const auto empty = run({"orthorep", fixture("empty4.graph")});
  EXPECT_EQ(empty.code, 0);
  EXPECT_TRUE(empty.report["verification"]["caveat"].get<bool>());
  EXPECT_EQ(empty.report["result"]["d"], 4);

  const auto loop = run({"orthorep", fixture("self_loop.graph")});
  EXPECT_EQ(loop.code, cli::kExitFault);
  EXPECT_EQ(loop.report["result"]["error"]["line"], 2);
}

TEST(CliDecompose, Examples) {
  const auto cp = run({"decompose", fixture("crosspolytope3_shuffled.txt")});
  ASSERT_EQ(cp.code, 0) << cp.err;
  const auto& blocks = cp.report["result"]["blocks"];
  ASSERT_EQ(blocks.size(), 3u);
  for (const auto& b : blocks) EXPECT_EQ(b["indices"].size(), 2u);

  const auto ex = run({"decompose", fixture("example5_edm.txt")});
  ASSERT_EQ(ex.code, 0) << ex.err;
  EXPECT_EQ(ex.report["result"]["blocks"][0]["indices"], json({1, 2}));
  EXPECT_EQ(ex.report["result"]["blocks"][1]["indices"], json({3, 4, 5}));
  EXPECT_EQ(ex.report["result"]["blocks"][1]["origin"], "boundary");

  const auto simplex = run({"decompose", fixture("unit_simplex4.txt")});
  EXPECT_EQ(simplex.code, cli::kExitRejected);
  EXPECT_EQ(simplex.report["result"]["precondition"]["codimension"], 1);
}

TEST(CliGen, Outputs) {
  const auto us = run({"gen", "unit-simplex", "5"});
  EXPECT_EQ(us.code, 0);
  const auto m = parse_matrix(us.out);
  for (Index i = 0; i < 5; ++i)
    for (Index j = 0; j < 5; ++j) EXPECT_NEAR(m(i, j), i == j ? 0.0 : 2.5, 1e-15);

  const auto cp = run({"gen", "crosspolytope", "2"});
  EXPECT_EQ(parse_matrix(cp.out), parse_matrix(read_file(fixture("crosspolytope2.txt"))));

  const auto a = run({"gen", "random-sphere", "6", "3", "--seed", "42"});
  const auto b = run({"gen", "random-sphere", "6", "3", "--seed", "42"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run({"gen", "random-sphere", "6", "3", "--seed", "43"}).out);

  EXPECT_EQ(run({"gen", "simplex", "3", "-1"}).code, cli::kExitRejected);
  EXPECT_EQ(run({"gen", "random-sphere", "3", "3"}).code, cli::kExitRejected);
  EXPECT_EQ(run({"gen", "torus", "3"}).code, cli::kExitRejected);
}

TEST(CliGen, WritesFile) {
  const auto path = (std::filesystem::temp_directory_path() / "edmsphere_gen_test.txt").string();
  const auto r = run({"gen", "simplex", "3", "3", "-o", path});
  EXPECT_EQ(r.code, 0);
  expect_schema(r.report);
  EXPECT_TRUE(parse_matrix(read_file(path)).isApprox(parse_matrix(read_file(fixture("unit_simplex3.txt")))));
  std::filesystem::remove(path);
}

TEST(CliCheckRankin, Modes) {
  const auto sample = run({"check-rankin", "--sample", "4", "1000", "7"});
  ASSERT_EQ(sample.code, 0) << sample.err;
  EXPECT_TRUE(sample.report["verification"]["all_trials_within_bound"].get<bool>());
  EXPECT_LE(sample.report["result"]["worst_min_d2"].get<double>(), 2.0 + 1e-7);

  const auto cp = run({"check-rankin", fixture("crosspolytope3_shuffled.txt")});
  ASSERT_EQ(cp.code, 0) << cp.err;
  EXPECT_TRUE(cp.report["result"]["crosspolytope"]["recognized"].get<bool>());
  EXPECT_EQ(cp.report["result"]["crosspolytope"]["permutation"].size(), 6u);

  const auto sq = run({"check-rankin", fixture("crosspolytope2.txt")});
  EXPECT_EQ(sq.code, 0);
  EXPECT_TRUE(sq.report["result"]["codimension2"]["holds"].get<bool>());

  EXPECT_EQ(run({"check-rankin", fixture("unit_simplex4.txt")}).code, cli::kExitRejected);
  EXPECT_EQ(run({"check-rankin"}).code, cli::kExitRejected);
}

TEST(CliTolerances, FlagsAndProfiles) {
  const auto strict = run({"--profile", "strict", "validate", fixture("unit_simplex3.txt")});
  EXPECT_DOUBLE_EQ(strict.report["tolerances"]["psd"].get<double>(), 1e-11);
  const auto flag = run({"--tol-sign", "0.5", "validate", fixture("unit_simplex3.txt")});
  EXPECT_DOUBLE_EQ(flag.report["tolerances"]["sign"].get<double>(), 0.5);
  EXPECT_EQ(run({"--profile", "nonsense", "validate", fixture("unit_simplex3.txt")}).code, cli::kExitRejected);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitRejected);
}

TEST(CliReports, DeterministicApartFromWallTime) {
  auto a = run({"decompose", fixture("example5_edm.txt")}).report;
  auto b = run({"decompose", fixture("example5_edm.txt")}).report;
  a.erase("wall_time_s");
  b.erase("wall_time_s");
  EXPECT_EQ(a, b);
  EXPECT_EQ(json::parse(a.dump()), a);
}

}  // namespace
}  // namespace edmsphere
