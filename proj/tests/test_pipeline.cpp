#include <gtest/gtest.h>

#include "support.hpp"

using namespace gravity;
namespace fs = std::filesystem;

namespace {

std::string config_path(const char* name) { return (fs::path(GRAVITY_SOURCE_DIR) / "configs" / name).string(); }

testkit::CommandResult cli(const std::string& args, const fs::path& scratch) {
  return testkit::run_command(testkit::quoted(GRAVITY_CLI) + " " + args, scratch);
}

testkit::CommandResult run_config(const char* name, const fs::path& out, const std::string& extra = "") {
  return cli("--config " + testkit::quoted(config_path(name)) + " --out " + testkit::quoted(out.string()) + " " +
                 extra + " run",
             out.parent_path());
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

double hausman_p_from_csv(const fs::path& dir) {
  std::ifstream in(dir / "hausman.csv");
  const auto t = read_csv(in, {"variable", "b"});
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    if (t.field(r, "variable") == "p_value") return parse_number(t.field(r, "b"), "b", r);
  return std::nan("");
}

}  // namespace

TEST(Pipeline, RejectBranchWritesGmmArtifacts) {
  const auto dir = testkit::fresh_dir("pipe_reject") / "out";
  const auto r = run_config("synthetic_reject.ini", dir);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  for (const char* f : {"unitroot.md", "unitroot.csv", "estimates.md", "estimates.csv", "hausman.md", "hausman.csv",
                        "gmm.md", "gmm.csv", "run.log", "results.json"})
    EXPECT_TRUE(fs::exists(dir / f)) << f;
  EXPECT_LT(hausman_p_from_csv(dir), 0.05);
  const auto log = testkit::slurp(dir / "run.log");
  EXPECT_TRUE(contains(log, "GMM applied: Hausman rejected (p = ")) << log;
  EXPECT_TRUE(contains(testkit::slurp(dir / "estimates.md"), "GMM"));
  EXPECT_TRUE(contains(testkit::slurp(dir / "hausman.md"), "Prob>χ² = "));
}

TEST(Pipeline, NoRejectBranchSuppressesGmm) {
  const auto dir = testkit::fresh_dir("pipe_accept") / "out";
  const auto r = run_config("synthetic_no_reject.ini", dir);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_FALSE(fs::exists(dir / "gmm.md"));
  EXPECT_FALSE(fs::exists(dir / "gmm.csv"));
  EXPECT_GE(hausman_p_from_csv(dir), 0.05);
  const auto log = testkit::slurp(dir / "run.log");
  EXPECT_TRUE(contains(log, "GMM skipped: Hausman failed to reject (p = ")) << log;
  const auto j = nlohmann::json::parse(testkit::slurp(dir / "results.json"));
  EXPECT_FALSE(j.at("gmm_applied").get<bool>());
}

TEST(Pipeline, ResultsReproducibleAcrossRuns) {
  const auto a = testkit::fresh_dir("pipe_repro_a") / "out";
  const auto b = testkit::fresh_dir("pipe_repro_b") / "out";
  ASSERT_EQ(run_config("synthetic_reject.ini", a).exit_code, 0);
  ASSERT_EQ(run_config("synthetic_reject.ini", b).exit_code, 0);
  for (const char* f : {"results.json", "estimates.md", "estimates.csv", "hausman.md", "unitroot.md", "gmm.md"})
    EXPECT_EQ(testkit::slurp(a / f), testkit::slurp(b / f)) << f;
  const auto c = testkit::fresh_dir("pipe_repro_c") / "out";
  ASSERT_EQ(run_config("synthetic_reject.ini", c, "--seed 43").exit_code, 0);
  EXPECT_NE(testkit::slurp(a / "results.json"), testkit::slurp(c / "results.json"));
}

TEST(Pipeline, FormatOverride) {
  const auto dir = testkit::fresh_dir("pipe_format") / "out";
  ASSERT_EQ(run_config("synthetic_no_reject.ini", dir, "--format csv").exit_code, 0);
  EXPECT_TRUE(fs::exists(dir / "estimates.csv"));
  EXPECT_FALSE(fs::exists(dir / "estimates.md"));
}

TEST(Pipeline, MissingInputIsDataError) {
  const auto scratch = testkit::fresh_dir("pipe_missing");
  const auto missing = (scratch / "nowhere" / "trade.csv").string();
  testkit::write_file(scratch / "cfg.ini",
                      "[run]\nvariant = GMP\noutput_dir = out\n[inputs]\ntrade = " + missing +
                          "\nindicators = i.csv\npair_static = p.csv\nmemberships = m.csv\n");
  const auto r = cli("--config " + testkit::quoted((scratch / "cfg.ini").string()) + " run", scratch);
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_TRUE(contains(r.err, "error code=3 kind=data")) << r.err;
  EXPECT_TRUE(contains(r.err, missing)) << r.err;
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST(Pipeline, ConfigErrorExitsTwo) {
  const auto scratch = testkit::fresh_dir("pipe_config");
  testkit::write_file(scratch / "cfg.ini", "[run]\nvariant = synthetic\n[bogus]\nx = 1\n");
  const auto r = cli("--config " + testkit::quoted((scratch / "cfg.ini").string()) + " run", scratch);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_TRUE(contains(r.err, "error code=2 kind=config")) << r.err;
  EXPECT_EQ(cli("--config " + testkit::quoted((scratch / "absent.ini").string()) + " run", scratch).exit_code, 2);
  EXPECT_EQ(cli("--bogus-flag run", scratch).exit_code, 2);

  testkit::write_file(scratch / "chain.ini", "[run]\nvariant = synthetic\n[model]\nestimators = fixed_effects,hausman\n");
  std::ostringstream diag;
  EXPECT_EQ(run_pipeline(scratch / "chain.ini", RunOverrides{scratch / "out", {}, {}, {}}, diag), kExitConfig);
  EXPECT_TRUE(contains(diag.str(), "hausman needs both")) << diag.str();
}

TEST(Pipeline, NumericalFailureExitsFour) {
  // Intercept plus a column that is constant across the whole synthetic panel.
  const auto scratch = testkit::fresh_dir("pipe_numeric");
  testkit::write_file(scratch / "cfg.ini",
                      "[run]\nvariant = synthetic\noutput_dir = out\n[synthetic]\nn_entities = 4\n"
                      "[model]\nestimators = pooled_ols\n[regressors]\nlog(gdp_importer) =\nlog(distance) =\n"
                      "dummy(partner=AAA) =\ndummy(partner=AAB) =\ndummy(partner=AAC) =\n"
                      "dummy(partner=AAD) =\n[unitroot]\nenabled = false\n");
  std::ostringstream diag;
  EXPECT_EQ(run_pipeline(scratch / "cfg.ini", {}, diag), kExitNumerical) << diag.str();
  EXPECT_TRUE(contains(diag.str(), "error code=4 kind=numerical")) << diag.str();
}

TEST(Cli, StagesAndReport) {
  const auto dir = testkit::fresh_dir("cli_stages") / "out";
  const auto base = "--config " + testkit::quoted(config_path("synthetic_no_reject.ini")) + " --out " +
                    testkit::quoted(dir.string());
  ASSERT_EQ(cli(base + " ingest", dir.parent_path()).exit_code, 0);
  EXPECT_EQ(testkit::slurp(dir / "panel.csv").rfind("reporter,partner,year,variable,value\n", 0), 0u);
  ASSERT_EQ(cli(base + " unitroot", dir.parent_path()).exit_code, 0);
  EXPECT_TRUE(fs::exists(dir / "unitroot.md"));
  EXPECT_FALSE(fs::exists(dir / "estimates.md"));
  ASSERT_EQ(cli(base + " estimate", dir.parent_path()).exit_code, 0);
  EXPECT_TRUE(fs::exists(dir / "estimates.md"));
  ASSERT_EQ(cli(base + " run", dir.parent_path()).exit_code, 0);

  const auto results = testkit::quoted((dir / "results.json").string());
  const auto md = cli("report " + results + " --as markdown", dir.parent_path());
  ASSERT_EQ(md.exit_code, 0) << md.err;
  EXPECT_TRUE(contains(md.out, "| Variables |"));
  EXPECT_TRUE(contains(md.out, "Prob>χ² = "));
  const auto csv = cli("report " + results + " --as csv", dir.parent_path());
  ASSERT_EQ(csv.exit_code, 0) << csv.err;
  EXPECT_TRUE(contains(csv.out, "variable,label,fixed_effects_coef"));
  EXPECT_EQ(cli("report " + testkit::quoted((dir / "panel.csv").string()), dir.parent_path()).exit_code, 3);
}

TEST(Cli, SimulateWritesPanelAndTruth) {
  const auto dir = testkit::fresh_dir("cli_sim") / "out";
  const auto r = cli("--config " + testkit::quoted(config_path("synthetic_reject.ini")) + " --out " +
                         testkit::quoted(dir.string()) + " --seed 9 simulate",
                     dir.parent_path());
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const auto truth = nlohmann::json::parse(testkit::slurp(dir / "truth.json"));
  EXPECT_EQ(truth.at("seed").get<std::uint64_t>(), 9u);
  EXPECT_EQ(truth.at("beta").at("ln_distance").get<double>(), -1.2);
  std::ifstream in(dir / "panel.csv");
  const auto t = read_csv(in, {"reporter", "partner", "year", "variable", "value"});
  EXPECT_EQ(t.rows.size(), 40u * 10u * 7u);
}

TEST(Cli, IngestSampleCsvs) {
  const auto dir = testkit::fresh_dir("cli_ingest") / "out";
  const auto r = cli("--config " + testkit::quoted(config_path("gmp_sample.ini")) + " --out " +
                         testkit::quoted(dir.string()) + " run",
                     dir.parent_path());
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const auto j = nlohmann::json::parse(testkit::slurp(dir / "results.json"));
  EXPECT_EQ(j.at("variant"), "GMP");
  EXPECT_TRUE(fs::exists(dir / "hausman.md"));
}
