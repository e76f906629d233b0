// gravity: command-line front end for the panel gravity pipeline.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "gravity/gravity.hpp"

namespace {

struct GlobalOptions {
  std::string config;
  std::string out;
  std::string format;
  std::optional<std::uint64_t> seed;
  std::string log_level;

  gravity::RunOverrides overrides() const {
    gravity::RunOverrides o;
    if (!out.empty()) o.output_dir = out;
    if (!format.empty()) o.format = format;
    o.seed = seed;
    if (!log_level.empty()) o.log_level = log_level;
    return o;
  }
};

std::optional<gravity::RunConfig> load(const GlobalOptions& g, int& rc) {
  std::optional<gravity::RunConfig> cfg;
  rc = gravity::guarded(std::cerr, [&] {
    if (g.config.empty()) throw gravity::ConfigError("--config is required for this command");
    cfg = gravity::load_run_config(g.config);
    gravity::apply_overrides(*cfg, g.overrides());
    return static_cast<int>(gravity::kExitOk);
  });
  return rc == gravity::kExitOk ? cfg : std::nullopt;
}

int stage(const GlobalOptions& g, gravity::Stage s) {
  int rc = 0;
  auto cfg = load(g, rc);
  if (!cfg) return rc;
  return gravity::run_stage(std::move(*cfg), s);
}

int simulate(const GlobalOptions& g) {
  return gravity::guarded(std::cerr, [&] {
    gravity::RunConfig cfg;
    if (!g.config.empty()) cfg = gravity::load_run_config(g.config);
    cfg.dataset = gravity::Dataset::synthetic;
    gravity::apply_overrides(cfg, g.overrides());
    std::filesystem::create_directories(cfg.output_dir);
    const auto s = gravity::generate_gravity_panel(cfg.dgp);
    std::ofstream panel(cfg.output_dir / "panel.csv", std::ios::binary);
    gravity::write_panel_csv(s.panel, panel);
    nlohmann::json truth{{"seed", cfg.dgp.seed}, {"beta", s.truth}};
    std::ofstream(cfg.output_dir / "truth.json", std::ios::binary) << truth.dump(2) << "\n";
    return static_cast<int>(gravity::kExitOk);
  });
}

int report(const std::string& results_path, const std::string& format) {
  return gravity::guarded(std::cerr, [&] {
    std::ifstream in(results_path);
    if (!in) throw gravity::DataError("cannot read " + results_path);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw gravity::DataError("malformed results.json: " + std::string(e.what()));
    }
    gravity::TableFormat f = gravity::TableFormat::markdown;
    if (format == "csv") {
      f = gravity::TableFormat::csv;
    } else if (format == "text") {
      f = gravity::TableFormat::text;
    } else if (!format.empty() && format != "markdown") {
      throw gravity::ConfigError("report: --format must be markdown, csv or text");
    }
    std::cout << gravity::render_results_json(j, f);
    return static_cast<int>(gravity::kExitOk);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Panel gravity-model estimation pipeline"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--config", g.config, "INI run configuration")->check(CLI::ExistingFile);
  app.add_option("--out", g.out, "Output directory (overrides [run] output_dir)");
  app.add_option("--format", g.format, "Artifact formats")->check(CLI::IsMember({"markdown", "csv", "both"}));
  app.add_option("--seed", g.seed, "Seed for the synthetic generator");
  app.add_option("--log-level", g.log_level, "trace, debug, info, warn, error or off");

  auto* ingest = app.add_subcommand("ingest", "Assemble the panel and write panel.csv");
  auto* unitroot = app.add_subcommand("unitroot", "Panel unit-root pretests");
  auto* estimate = app.add_subcommand("estimate", "FE, RE, Hausman and conditional IV-GMM");
  auto* run = app.add_subcommand("run", "Whole pipeline, including results.json");
  auto* simulate_cmd = app.add_subcommand("simulate", "Write a synthetic panel and its true coefficients");
  auto* report_cmd = app.add_subcommand("report", "Render tables from a results.json file");
  std::string results_path;
  std::string report_format;
  report_cmd->add_option("results", results_path, "results.json")->required();
  report_cmd->add_option("--as", report_format, "markdown, csv or text");
  for (auto* sub : {ingest, unitroot, estimate, run, simulate_cmd, report_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : gravity::kExitConfig;
  }

  if (*ingest) return stage(g, gravity::Stage::ingest);
  if (*unitroot) return stage(g, gravity::Stage::unitroot);
  if (*estimate) return stage(g, gravity::Stage::estimate);
  if (*run) return stage(g, gravity::Stage::run);
  if (*simulate_cmd) return simulate(g);
  return report(results_path, report_format);
}
