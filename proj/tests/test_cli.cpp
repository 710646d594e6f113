#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>

#include "chern/cli.hpp"

using namespace chern::cli;

namespace {

const std::filesystem::path kCorpus = CHERN_CORPUS_DIR;
const std::filesystem::path kGolden = CHERN_GOLDEN_DIR;

json free_plane_job() {
  return json::parse(R"({
    "ring": {"variables": ["x", "y"]},
    "module": {"quotient": []},
    "ideals": {"Q": ["x", "y"]},
    "operations": [{"op": "hilbert-coefficients"}]
  })");
}

}  // namespace

TEST(Cli, FreeModuleCoefficients) {
  auto res = run_job(free_plane_job(), {.timings = false});
  EXPECT_TRUE(res.passed);
  EXPECT_EQ(res.report["results"][0]["e"], json({1, 0, 0}));
  EXPECT_EQ(res.report["field"], 32003);
}

TEST(Cli, UnknownFieldsAreRejected) {
  auto job = free_plane_job();
  job["module"]["shift"] = 1;
  EXPECT_THROW(run_job(job), SchemaError);
  job = free_plane_job();
  job["operations"][0]["idea"] = "Q";
  EXPECT_THROW(run_job(job), SchemaError);
  job = free_plane_job();
  job["expect"] = {{"cohen_macaulai", true}};
  EXPECT_THROW(check_instance(job), SchemaError);
}

TEST(Cli, MalformedPolynomialReportsPosition) {
  auto job = free_plane_job();
  job["ideals"]["Q"] = {"x", "y**2"};
  try {
    run_job(job);
    FAIL() << "expected a schema error";
  } catch (const SchemaError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("job.ideals.Q[1]"), std::string::npos) << what;
    EXPECT_NE(what.find("position 2"), std::string::npos) << what;
  }
}

TEST(Cli, SchemaIsValidatedBeforeComputing) {
  auto job = free_plane_job();
  job["operations"].push_back({{"op", "hdeg"}, {"ideal", "P"}});
  EXPECT_THROW(run_job(job), SchemaError);
  job = free_plane_job();
  job["operations"][0]["op"] = "integral-closure";
  EXPECT_THROW(run_job(job), SchemaError);
}

TEST(Cli, ComputationErrorsNameTheModule) {
  auto job = free_plane_job();
  job["ideals"]["Q"] = {"x"};
  try {
    run_job(job);
    FAIL() << "expected a computation error";
  } catch (const ComputeError& e) {
    EXPECT_EQ(e.module(), "hilbert-engine");
  }
}

TEST(Cli, RationalCoefficients) {
  auto job = free_plane_job();
  job["ring"]["field"] = "QQ";
  job["ideals"]["Q"] = {"x/2 + y", "x - y/3"};
  auto res = run_job(job, {.timings = false});
  EXPECT_EQ(res.report["results"][0]["e"], json({1, 0, 0}));
}

TEST(Cli, EnvironmentSetsDefaultCharacteristic) {
  ::setenv("CHERN_CHARACTERISTIC", "101", 1);
  EXPECT_EQ(default_characteristic(), 101u);
  EXPECT_EQ(run_job(free_plane_job()).report["field"], 101);
  ::setenv("CHERN_CHARACTERISTIC", "abc", 1);
  EXPECT_THROW(default_characteristic(), SchemaError);
  ::unsetenv("CHERN_CHARACTERISTIC");
  EXPECT_EQ(default_characteristic(), 32003u);
}

TEST(Cli, TwoPlaneClassification) {
  auto job = load_json(kCorpus / "two_plane.json");
  auto res = run_job(job, {.timings = false});
  ASSERT_TRUE(res.passed);
  const auto& classify = res.report["results"][0];
  EXPECT_EQ(classify["op"], "classify");
  EXPECT_EQ(classify["buchsbaum_sampled"], true);
  EXPECT_EQ(classify["lambda"], json({-1}));
  EXPECT_EQ(res.report["results"][1]["distinct"], json({-1}));
}

TEST(Cli, ReportsIgnoreWorkerCount) {
  auto job = load_json(kCorpus / "mixed_dim1.json");
  job["operations"].push_back({{"op", "estimate-lambda"}});
  auto a = run_job(job, {.seed = 5, .jobs = 1, .timings = false});
  auto b = run_job(job, {.seed = 5, .jobs = 4, .timings = false});
  EXPECT_EQ(a.report.dump(), b.report.dump());
}

TEST(Cli, CsvHasOneRowPerTableEntry) {
  auto job = load_json(kCorpus / "br_diagonal_line.json");
  auto csv = to_csv(run_job(job).report);
  EXPECT_NE(csv.find("buchsbaum-rim,0,3,12\n"), std::string::npos) << csv;
}

TEST(Cli, EmptyCorpusPasses) {
  auto dir = std::filesystem::temp_directory_path() / "chern_empty_corpus";
  std::filesystem::create_directories(dir);
  auto res = check_corpus(dir);
  EXPECT_TRUE(res.passed);
  EXPECT_TRUE(res.report["matrix"].empty());
}

TEST(Cli, NegativeControlFailsOnTheInjectedClaim) {
  auto res = check_corpus(kCorpus / "negative");
  EXPECT_FALSE(res.passed);
  EXPECT_EQ(res.report["failures"], json({"claims/negative_cm_claim"}));
  EXPECT_EQ(res.report["matrix"]["serre-identity"]["negative_cm_claim"]["verdict"], "pass");
}

TEST(Cli, GoldenCheckReport) {
  auto res = check_instance(load_json(kCorpus / "mixed_dim1.json"), {.seed = 0});
  std::ifstream in(kGolden / "mixed_dim1_check.json");
  ASSERT_TRUE(in) << "missing golden file";
  EXPECT_EQ(res.report, json::parse(in));
}
