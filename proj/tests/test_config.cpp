#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fracineq/config.hpp"
#include "fracineq/error.hpp"

namespace fracineq {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("fracineq_config_" + name);
  fs::remove_all(dir);
  return dir;
}

TEST(Config, DefaultsFromEmptyObject) {
  const auto cfg = RunConfig::parse("{}");
  EXPECT_EQ(cfg.domain.dimension(), 1);
  EXPECT_EQ(cfg.domain.points(), 128u);
  EXPECT_EQ(cfg.family.size(), 20u);
  EXPECT_TRUE(cfg.cases.empty());
  EXPECT_EQ(cfg.format, OutputFormat::csv);
  EXPECT_TRUE(cfg.refinement);
  EXPECT_EQ(cfg.jobs, 1u);
  EXPECT_FALSE(cfg.allow_inconclusive);
}

TEST(Config, ParsesFullDocument) {
  const auto cfg = RunConfig::parse(R"({
    "domain": {"dimension": 2, "period": 8, "points": 32},
    "family": {"kind": "custom", "seed": 4, "generators": [
      {"type": "fourier_mode", "k": [1, 2]},
      {"type": "gaussian", "sigma": 0.9, "center": [0.5, -0.5], "weight": 2},
      {"type": "sum", "terms": [{"type": "smooth_bump", "radius": 2}, {"type": "random_band_limited", "seed": 3, "max_band": 4}]}
    ]},
    "cases": [
      {"id": "a", "theorem": "theorem2", "s": 0.25, "beta": 0.25, "p": {"type": "sinusoid", "mean": 2.5, "amplitude": 0.5}},
      {"id": "b", "theorem": "theorem5", "s": 0.25, "beta": 0.25, "young": {"type": "capped_power", "p": 3, "q": 2, "knee": 0.5}},
      {"id": "c", "theorem": "phi_maximal", "profile": {"type": "heat_derivative", "order": 1}},
      {"id": "d", "theorem": "theorem3", "s": 0.25, "frak_p": 2, "p": {"type": "two_phase", "left": 2, "right": 3}},
      {"id": "e", "theorem": "maximal", "p": 1.5}
    ],
    "output": {"format": "both", "directory": "out", "basename": "r"},
    "refinement": false, "jobs": 3, "allow_inconclusive": true
  })");
  EXPECT_EQ(cfg.domain.dimension(), 2);
  EXPECT_EQ(cfg.family.size(), 3u);
  ASSERT_EQ(cfg.cases.size(), 5u);
  EXPECT_EQ(cfg.cases[0].theorem, Theorem::sobolev_like);
  EXPECT_TRUE(std::holds_alternative<SinusoidExponent>(*cfg.cases[0].exponent));
  EXPECT_EQ(cfg.cases[1].young->kind, "capped_power");
  EXPECT_DOUBLE_EQ(cfg.cases[1].young->knee, 0.5);
  EXPECT_EQ(cfg.cases[2].profile.kind, SmoothProfile::Kind::heat_derivative);
  EXPECT_DOUBLE_EQ(cfg.cases[2].profile.order, 1.0);
  EXPECT_TRUE(std::holds_alternative<TwoPhaseExponent>(*cfg.cases[3].exponent));
  EXPECT_DOUBLE_EQ(cfg.cases[4].p, 1.5);
  EXPECT_EQ(cfg.format, OutputFormat::both);
  EXPECT_EQ(cfg.basename, "r");
  EXPECT_FALSE(cfg.refinement);
  EXPECT_EQ(cfg.jobs, 3u);
  EXPECT_TRUE(cfg.allow_inconclusive);
}

TEST(Config, RejectsUnknownKeys) {
  EXPECT_THROW(RunConfig::parse(R"({"domian": {}})"), InvalidArgument);
  EXPECT_THROW(RunConfig::parse(R"({"cases": [{"theorem": "maximal", "p": 2, "q": 3}]})"), InvalidArgument);
  EXPECT_THROW(RunConfig::parse(R"({"output": {"fmt": "csv"}})"), InvalidArgument);
  EXPECT_THROW(RunConfig::parse(R"({"cases": [{"theorem": "maximal", "p": {"type": "constant", "p": 2, "x": 1}}]})"),
               InvalidArgument);
}

TEST(Config, GateViolationsSurfaceAtLoad) {
  try {
    RunConfig::parse(R"({"cases": [{"theorem": "theorem1", "s": 0.4, "s1": 0.6, "beta": 1}]})");
    FAIL() << "expected GateError";
  } catch (const GateError& e) {
    EXPECT_EQ(e.relation(), "theorem1");
  }
  EXPECT_THROW(RunConfig::parse(R"({"cases": [{"theorem": "theorem5", "s": 0.25, "beta": 0.25, "young": {"type": "power", "p": 1}}]})"),
               GateError);
}

TEST(Config, RejectsMalformedInput) {
  EXPECT_THROW(RunConfig::parse("{"), InvalidArgument);
  EXPECT_THROW(RunConfig::parse("[]"), InvalidArgument);
  EXPECT_THROW(RunConfig::parse(R"({"cases": [{"id": "x", "theorem": "maximal", "p": 2}, {"id": "x", "theorem": "maximal", "p": 3}]})"),
               InvalidArgument);
  EXPECT_THROW(RunConfig::parse(R"({"cases": [{"theorem": "theorem9"}]})"), InvalidArgument);
  EXPECT_THROW(RunConfig::parse(R"({"family": {"kind": "custom", "generators": [{"type": "gaussian", "sigma": 0.01}]}})"),
               InvalidArgument);
  EXPECT_THROW(RunConfig::parse(R"({"family": {"kind": "standard", "size": 10}})"), InvalidArgument);
  EXPECT_THROW(RunConfig::parse(R"({"domain": {"dimension": 2, "points": 32}})"), InvalidArgument);
  EXPECT_THROW(RunConfig::parse(R"({"jobs": 0})"), InvalidArgument);
  EXPECT_THROW(RunConfig::parse(R"({"output": {"format": "xml"}})"), InvalidArgument);
  EXPECT_THROW(RunConfig::parse(R"({"cases": [{"theorem": "phi_maximal", "profile": "box"}]})"), InvalidArgument);
}

TEST(Config, RandomFamilySize) {
  const auto cfg = RunConfig::parse(R"({"family": {"kind": "random_band_limited", "seed": 9, "size": 7, "max_band": 3}})");
  EXPECT_EQ(cfg.family.size(), 7u);
}

TEST(Config, ParseCaseStandalone) {
  const DomainSpec d(1, 16.0, 128);
  const auto c = parse_case(R"({"id": "z", "theorem": "young_oneil", "s": 0.5, "p": 1.5})", d);
  EXPECT_EQ(c.case_id, "z");
  EXPECT_EQ(c.theorem, Theorem::young_oneil);
  EXPECT_DOUBLE_EQ(c.p, 1.5);
}

TEST(Config, EnvironmentOverrides) {
  auto cfg = RunConfig::parse("{}");
  ::setenv("FRACINEQ_OUTPUT_DIR", "/tmp/fracineq_env_dir", 1);
  ::setenv("FRACINEQ_JOBS", "5", 1);
  cfg.apply_environment();
  EXPECT_EQ(cfg.directory, fs::path("/tmp/fracineq_env_dir"));
  EXPECT_EQ(cfg.jobs, 5u);
  ::setenv("FRACINEQ_JOBS", "zero", 1);
  EXPECT_THROW(cfg.apply_environment(), InvalidArgument);
  ::unsetenv("FRACINEQ_OUTPUT_DIR");
  ::unsetenv("FRACINEQ_JOBS");
}

TEST(Config, ExecuteWithoutCasesWritesHeaderOnly) {
  auto cfg = RunConfig::parse("{}");
  cfg.directory = scratch("empty");
  const auto res = execute(cfg);
  EXPECT_EQ(res.exit_code, 0);
  ASSERT_EQ(res.files.size(), 1u);
  const auto text = slurp(res.files[0]);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1);
  EXPECT_EQ(text.rfind("case_id,theorem,", 0), 0u);
}

TEST(Config, ExecuteTheorem2WritesBothFormats) {
  auto cfg = RunConfig::parse(R"({
    "cases": [{"id": "t2", "theorem": "theorem2", "s": 0.25, "beta": 0.25, "p": 2}],
    "output": {"format": "both", "basename": "t2"}
  })");
  cfg.directory = scratch("t2");
  const auto res = execute(cfg);
  EXPECT_EQ(res.exit_code, 0);
  ASSERT_EQ(res.files.size(), 2u);
  const auto doc = nlohmann::json::parse(slurp(cfg.directory / "t2.json"));
  ASSERT_EQ(doc.size(), 1u);
  EXPECT_EQ(doc[0]["case_id"], "t2");
  EXPECT_DOUBLE_EQ(doc[0]["theta"].get<double>(), 0.5);
  EXPECT_TRUE(doc[0]["pass"].get<bool>());
  EXPECT_NE(slurp(cfg.directory / "t2.csv").find("t2,theorem2,1,0.25,0,0.25,0.5,const(2)"), std::string::npos);
}

TEST(Config, InconclusiveHonoursFlag) {
  const std::string base = R"({
    "family": {"kind": "custom", "generators": [{"type": "fourier_mode", "k": 0}]},
    "cases": [{"id": "c", "theorem": "maximal", "p": 2}])";
  auto strict = RunConfig::parse(base + "}");
  strict.directory = scratch("strict");
  EXPECT_EQ(execute(strict).exit_code, 1);
  auto lenient = RunConfig::parse(base + R"(, "allow_inconclusive": true})");
  lenient.directory = scratch("lenient");
  const auto res = execute(lenient);
  ASSERT_EQ(res.reports.size(), 1u);
  EXPECT_TRUE(res.reports[0].inconclusive);
  EXPECT_EQ(res.exit_code, 0);
}

}  // namespace
}  // namespace fracineq
