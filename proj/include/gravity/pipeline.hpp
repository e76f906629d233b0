#pragma once

#include <Eigen/Dense>

#include <json.hpp>
#include <spdlog/sinks/basic_file_sink.h>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gravity/config.hpp"
#include "gravity/diagnostics.hpp"
#include "gravity/errors.hpp"
#include "gravity/estimators.hpp"
#include "gravity/ingest.hpp"
#include "gravity/model.hpp"
#include "gravity/report.hpp"
#include "gravity/synth.hpp"
#include "gravity/unitroot.hpp"
#include "gravity/worldbank.hpp"

namespace gravity {

enum ExitCode : int { kExitOk = 0, kExitInternal = 1, kExitConfig = 2, kExitData = 3, kExitNumerical = 4 };

/// Command-line settings that take precedence over the config file.
struct RunOverrides {
  std::optional<std::filesystem::path> output_dir;
  std::optional<std::string> format;  // markdown | csv | both
  std::optional<std::uint64_t> seed;
  std::optional<std::string> log_level;
};

inline void apply_overrides(RunConfig& cfg, const RunOverrides& o) {
  if (o.output_dir) cfg.output_dir = *o.output_dir;
  if (o.format) {
    if (*o.format == "markdown") {
      cfg.markdown = true;
      cfg.csv = false;
    } else if (*o.format == "csv") {
      cfg.markdown = false;
      cfg.csv = true;
    } else if (*o.format == "both") {
      cfg.markdown = cfg.csv = true;
    } else {
      throw ConfigError("--format must be markdown, csv or both");
    }
  }
  if (o.seed) cfg.dgp.seed = *o.seed;
  if (o.log_level) cfg.log_level = *o.log_level;
}

using Logger = std::shared_ptr<spdlog::logger>;

/// Logger writing run.log in the output directory (info and above, or lower
/// when requested) and `diag` at the requested level.
inline Logger make_run_logger(const std::filesystem::path& out_dir, const std::string& level,
                              std::ostream& diag) {
  const auto lvl = spdlog::level::from_str(level);
  if (lvl == spdlog::level::off && level != "off")
    throw ConfigError("unknown log level '" + level + "'");
  std::filesystem::create_directories(out_dir);
  auto file = std::make_shared<spdlog::sinks::basic_file_sink_mt>((out_dir / "run.log").string(), true);
  file->set_level(std::min(lvl, spdlog::level::info));
  file->set_pattern("[%l] %v");
  auto err = std::make_shared<spdlog::sinks::ostream_sink_mt>(diag, true);
  err->set_level(lvl);
  err->set_pattern("%l: %v");
  auto log = std::make_shared<spdlog::logger>("gravity", spdlog::sinks_init_list{file, err});
  log->set_level(spdlog::level::trace);
  log->flush_on(spdlog::level::trace);
  return log;
}

// ---------------------------------------------------------------------------
// Stage 1: data

struct LoadedData {
  PanelDataset panel;
  std::map<std::string, double> truth;
  std::vector<IngestWarning> warnings;
};

namespace detail {

inline std::ifstream open_input(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) throw DataError("input file not found: " + path.string());
  std::ifstream in(path);
  if (!in) throw DataError("cannot open input file: " + path.string());
  return in;
}

}  // namespace detail

inline LoadedData load_dataset(const RunConfig& cfg, const Logger& log, std::ostream& diag) {
  LoadedData out;
  if (cfg.dataset == Dataset::synthetic) {
    auto s = generate_gravity_panel(cfg.dgp);
    log->info("synthetic panel: {} entities x {} periods, seed {}", cfg.dgp.n_entities, cfg.dgp.n_periods,
              cfg.dgp.seed);
    out.panel = std::move(s.panel);
    out.truth = std::move(s.truth);
    return out;
  }

  auto trade_in = detail::open_input(cfg.inputs.trade);
  auto static_in = detail::open_input(cfg.inputs.pair_static);
  auto member_in = detail::open_input(cfg.inputs.memberships);
  const auto flows = read_trade_csv(trade_in, cfg.inputs.trade.string());
  const auto statics = read_pair_static_csv(static_in, cfg.inputs.pair_static.string());
  const auto members = read_membership_csv(member_in, cfg.inputs.memberships.string());
  std::vector<IndicatorRecord> indicators;
  if (cfg.fetch) {
    // reach back two years so lagged terms have predecessors available
    YearWindow years{cfg.window.first - 2, cfg.window.last};
    indicators = fetch_indicators(cfg.fetch->base_url, cfg.fetch->codes, cfg.fetch->countries, years,
                                  cfg.fetch->per_page);
    log->info("fetched {} indicator records from {}", indicators.size(), cfg.fetch->base_url);
  } else {
    auto ind_in = detail::open_input(cfg.inputs.indicators);
    indicators = read_indicator_csv(ind_in, cfg.inputs.indicators.string());
  }
  log->info("read {} flows, {} indicator records, {} pair records", flows.size(), indicators.size(),
            statics.size());

  auto assembled = assemble_gravity_panel(flows, indicators, statics, members, cfg.window, to_variant(cfg.dataset));
  for (const auto& w : assembled.warnings) {
    diag << w.line() << "\n";
    log->debug("{}", w.line());
  }
  if (!assembled.warnings.empty()) log->info("ingest emitted {} warnings", assembled.warnings.size());
  log->info("{} panel: {} entities, {} years", to_string(cfg.dataset), assembled.panel.n_entities(),
            assembled.panel.n_times());
  out.panel = std::move(assembled.panel);
  out.warnings = std::move(assembled.warnings);
  return out;
}

/// Long-format dump: reporter,partner,year,variable,value for present cells.
inline void write_panel_csv(const PanelDataset& p, std::ostream& out) {
  write_csv_row(out, {"reporter", "partner", "year", "variable", "value"});
  char buf[64];
  for (const auto& name : p.variable_names()) {
    const auto& v = p.variable(name);
    for (std::size_t e = 0; e < p.n_entities(); ++e) {
      for (std::size_t t = 0; t < p.n_times(); ++t) {
        const auto c = p.cell(e, t);
        if (v.state[c] != CellState::present) continue;
        std::snprintf(buf, sizeof buf, "%.17g", v.values[c]);
        write_csv_row(out, {p.entities()[e].reporter, p.entities()[e].partner, std::to_string(p.times()[t].year),
                            name, buf});
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Stage 2: unit-root pretests

struct UnitRootOutcome {
  std::vector<UnitRootRow> rows;
  std::vector<std::string> variables;
};

inline UnitRootOutcome run_unitroot_stage(const PanelDataset& panel, const UnitRootOptions& opt,
                                          const Logger& log) {
  UnitRootOutcome out;
  for (const auto& v : opt.variables) {
    ModelSpec probe;
    probe.dependent = v.term;
    const auto data = prepare_model(panel, probe);
    UnitRootRow row{v.label, std::nullopt, std::nullopt};
    try {
      auto ips = ips_test(data, v.term.variable, opt.lags, opt.deterministics);
      for (const auto& w : ips.warnings) log->warn("unitroot {}", w);
      row.ips = std::move(ips);
    } catch (const DataError& e) {
      log->warn("unitroot IPS skipped for {}: {}", v.term.variable, e.what());
    }
    try {
      row.fisher = fisher_adf_test(data, v.term.variable, opt.lags, opt.deterministics);
    } catch (const DataError& e) {
      log->warn("unitroot Fisher-ADF skipped for {}: {}", v.term.variable, e.what());
    }
    if (row.ips) log->info("IPS {}: W = {:.4f}, p = {:.4f}", v.term.variable, row.ips->w_stat, row.ips->p_value);
    if (row.fisher)
      log->info("Fisher-ADF {}: chi2({}) = {:.4f}, p = {:.4f}", v.term.variable, row.fisher->df,
                row.fisher->statistic, row.fisher->p_value);
    out.rows.push_back(std::move(row));
    out.variables.push_back(v.term.variable);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Stage 3: estimation chain

struct EstimationOutcome {
  std::vector<EstimationResult> results;  // table column order
  std::optional<TestResult> hausman;
  std::optional<HausmanComparison> comparison;
  bool gmm_applied = false;
  std::string gmm_decision;
  std::vector<std::string> order;
  std::map<std::string, std::string> labels;
};

namespace detail {

inline bool in_chain(const ModelSpec& m, EstimatorTag t) {
  return std::find(m.estimator_chain.begin(), m.estimator_chain.end(), t) != m.estimator_chain.end();
}

inline void log_drops(const RegressionProblem& p, const Logger& log) {
  std::map<std::string, std::size_t> counts;
  for (const auto& d : p.drop_log) {
    ++counts[d.reason];
    log->info("dropped {} {}: {}", d.entity.str(), d.time.year, d.reason);
  }
  for (const auto& [reason, n] : counts) log->info("dropped {} rows: {}", n, reason);
}

}  // namespace detail

inline EstimationOutcome run_estimation_stage(const PanelDataset& panel, const RunConfig& cfg, const Logger& log) {
  const auto& chain = cfg.model;
  const bool want_pooled = detail::in_chain(chain, EstimatorTag::pooled_ols);
  const bool want_fe = detail::in_chain(chain, EstimatorTag::fixed_effects);
  const bool want_re = detail::in_chain(chain, EstimatorTag::random_effects);
  const bool want_hausman = detail::in_chain(chain, EstimatorTag::hausman);
  const bool want_gmm = detail::in_chain(chain, EstimatorTag::iv_gmm);
  if (want_hausman && !(want_fe && want_re))
    throw ConfigError("estimator chain: hausman needs both fixed_effects and random_effects");

  ModelSpec base = cfg.model;
  base.instruments.clear();
  const auto problem = design_matrix(prepare_model(panel, base), base);
  detail::log_drops(problem, log);
  log->info("estimation sample: {} observations, {} entities, {} columns", problem.n_rows(),
            group_rows(problem.row_keys).count(), problem.X.cols());

  EstimationOutcome out;
  for (const auto& c : problem.columns) {
    out.order.push_back(c.name);
    out.labels[c.name] = c.label;
  }

  std::optional<EstimationResult> fe, re;
  if (want_pooled) out.results.push_back(pooled_ols(problem));
  if (want_fe) {
    fe = fixed_effects(problem);
    out.results.push_back(*fe);
    log->info("fixed effects: R-squared {:.4f}, df {}", fe->r_squared, fe->df_resid);
  }
  if (want_re) {
    re = random_effects(problem);
    out.results.push_back(*re);
    log->info("random effects: sigma2_e {:.6g}, sigma2_u {:.6g}{}", re->extras.at("sigma2_idiosyncratic"),
              re->extras.at("sigma2_entity"), re->flags.count("clamped_negative") ? " (clamped)" : "");
  }
  if (want_hausman) {
    out.comparison = hausman_comparison(*fe, *re);
    out.hausman = hausman_test(*out.comparison);
    log->info("Hausman: chi2({}) = {:.4f}, p = {:.4f}", out.hausman->df, out.hausman->statistic,
              out.hausman->p_value);
    for (const auto& f : out.hausman->flags) log->warn("Hausman flag: {}", f);
  }

  if (want_gmm) {
    if (want_hausman && !out.hausman->rejects(cfg.alpha)) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "GMM skipped: Hausman failed to reject (p = %.4f >= %.2f)",
                    out.hausman->p_value, cfg.alpha);
      out.gmm_decision = buf;
    } else {
      const auto gproblem = design_matrix(prepare_model(panel, cfg.model), cfg.model);
      auto gmm = iv_gmm(gproblem, cfg.gmm);
      char buf[160];
      if (want_hausman) {
        std::snprintf(buf, sizeof buf, "GMM applied: Hausman rejected (p = %.4f < %.2f)", out.hausman->p_value,
                      cfg.alpha);
      } else {
        std::snprintf(buf, sizeof buf, "GMM applied: requested without a Hausman gate");
      }
      out.gmm_decision = buf;
      out.gmm_applied = true;
      log->info("GMM sample: {} observations, Hansen J {:.4f} (df {})", gmm.n_obs, gmm.extras["hansen_j"],
                gmm.extras["hansen_j_df"]);
      for (const auto& f : gmm.flags) log->warn("GMM flag: {}", f);
      out.results.push_back(std::move(gmm));
    }
    log->info("{}", out.gmm_decision);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Artifacts

namespace detail {

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << text;
}

inline nlohmann::json vector_json(const Eigen::VectorXd& v) {
  auto a = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

inline Eigen::VectorXd json_vector(const nlohmann::json& a) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    v[static_cast<Eigen::Index>(i)] = a[i].is_null() ? std::numeric_limits<double>::quiet_NaN() : a[i].get<double>();
  return v;
}

inline std::string gmm_summary(const EstimationResult& g) {
  std::string s;
  char buf[200];
  auto get = [&](const char* k) {
    auto it = g.extras.find(k);
    return it == g.extras.end() ? std::numeric_limits<double>::quiet_NaN() : it->second;
  };
  std::snprintf(buf, sizeof buf, "Hansen J = %s (df %d), Prob>chi2 = %s\n", format_fixed(get("hansen_j"), 4).c_str(),
                static_cast<int>(get("hansen_j_df")), format_fixed(get("hansen_j_p"), 4).c_str());
  s += buf;
  for (const auto& [k, v] : g.extras) {
    if (k.rfind("first_stage_f:", 0) == 0) s += "First-stage F (" + k.substr(14) + ") = " + format_fixed(v, 2) + "\n";
  }
  for (const auto& f : g.flags) s += "flag: " + f + "\n";
  return s;
}

}  // namespace detail

inline void write_unitroot_artifacts(const RunConfig& cfg, const UnitRootOutcome& u) {
  if (cfg.markdown)
    detail::write_text(cfg.output_dir / "unitroot.md", "# Panel unit-root tests\n\n" +
                                                           render_unitroot_table(u.rows, TableFormat::markdown));
  if (cfg.csv) detail::write_text(cfg.output_dir / "unitroot.csv", render_unitroot_table(u.rows, TableFormat::csv));
}

inline void write_estimation_artifacts(const RunConfig& cfg, const EstimationOutcome& e) {
  CoefficientTableOptions opt;
  opt.labels = e.labels;
  opt.hausman = e.hausman;
  std::vector<EstimationResult> main;
  for (const auto& r : e.results) main.push_back(r);
  const std::string dep = cfg.model.dependent.display();
  if (cfg.markdown) {
    opt.format = TableFormat::markdown;
    detail::write_text(cfg.output_dir / "estimates.md", "# Estimates\n\nDependent variable: " + dep + "\n\n" +
                                                            render_coefficient_table(main, e.order, opt) +
                                                            "\nStandard errors in parentheses. ***, **, * mark "
                                                            "significance at 1%, 5% and 10%.\n");
  }
  if (cfg.csv) {
    opt.format = TableFormat::csv;
    detail::write_text(cfg.output_dir / "estimates.csv", render_coefficient_table(main, e.order, opt));
  }
  if (e.hausman) {
    if (cfg.markdown)
      detail::write_text(cfg.output_dir / "hausman.md",
                         "# Hausman test\n\n" + render_hausman_block(*e.hausman, *e.comparison, TableFormat::markdown));
    if (cfg.csv)
      detail::write_text(cfg.output_dir / "hausman.csv",
                         render_hausman_block(*e.hausman, *e.comparison, TableFormat::csv));
  }
  if (e.gmm_applied) {
    const auto& g = e.results.back();
    CoefficientTableOptions gopt;
    gopt.labels = e.labels;
    if (cfg.markdown) {
      gopt.format = TableFormat::markdown;
      detail::write_text(cfg.output_dir / "gmm.md", "# IV-GMM\n\n" + e.gmm_decision + "\n\n" +
                                                        render_coefficient_table({g}, e.order, gopt) + "\n" +
                                                        detail::gmm_summary(g));
    }
    if (cfg.csv) {
      gopt.format = TableFormat::csv;
      detail::write_text(cfg.output_dir / "gmm.csv", render_coefficient_table({g}, e.order, gopt));
    }
  }
}

inline nlohmann::json results_json(const RunConfig& cfg, const LoadedData& data,
                                   const std::optional<UnitRootOutcome>& u,
                                   const std::optional<EstimationOutcome>& e) {
  nlohmann::json j;
  j["variant"] = to_string(cfg.dataset);
  if (cfg.dataset == Dataset::synthetic) {
    j["seed"] = cfg.dgp.seed;
    j["truth"] = data.truth;
  }
  j["alpha"] = cfg.alpha;
  j["dependent"] = cfg.model.dependent.display();
  j["panel"] = {{"entities", data.panel.n_entities()}, {"years", data.panel.n_times()}};
  if (u) {
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < u->rows.size(); ++i) {
      const auto& r = u->rows[i];
      nlohmann::json row{{"label", r.label}, {"variable", u->variables[i]}};
      row["ips"] = r.ips ? nlohmann::json{{"w_stat", r.ips->w_stat},
                                          {"t_bar", r.ips->t_bar},
                                          {"p_value", r.ips->p_value},
                                          {"n_series", r.ips->n_series}}
                         : nlohmann::json(nullptr);
      row["fisher"] = r.fisher ? nlohmann::json{{"statistic", r.fisher->statistic},
                                                {"df", r.fisher->df},
                                                {"p_value", r.fisher->p_value}}
                               : nlohmann::json(nullptr);
      rows.push_back(row);
    }
    j["unitroot"] = rows;
  }
  if (e) {
    j["order"] = e->order;
    j["labels"] = e->labels;
    auto est = nlohmann::json::array();
    for (const auto& r : e->results) {
      est.push_back({{"method", to_string(r.method)},
                     {"names", r.names},
                     {"coefficients", detail::vector_json(r.coefficients)},
                     {"std_errors", detail::vector_json(r.std_errors)},
                     {"n_obs", r.n_obs},
                     {"df_resid", r.df_resid},
                     {"r_squared", r.r_squared},
                     {"intercept_name", r.intercept_name},
                     {"time_invariant", r.time_invariant},
                     {"flags", r.flags},
                     {"extras", r.extras}});
    }
    j["estimates"] = est;
    if (e->hausman) {
      j["hausman"] = {{"statistic", e->hausman->statistic},
                      {"df", e->hausman->df},
                      {"p_value", e->hausman->p_value},
                      {"flags", e->hausman->flags},
                      {"names", e->comparison->names},
                      {"b", detail::vector_json(e->comparison->b)},
                      {"B", detail::vector_json(e->comparison->B)},
                      {"se_diff", detail::vector_json(e->comparison->se_difference())}};
    } else {
      j["hausman"] = nullptr;
    }
    j["gmm_applied"] = e->gmm_applied;
    j["gmm_decision"] = e->gmm_decision;
  }
  return j;
}

/// Re-renders the tables stored in a results.json document.
inline std::string render_results_json(const nlohmann::json& j, TableFormat format) {
  std::string out;
  try {
    if (j.contains("unitroot")) {
      std::vector<UnitRootRow> rows;
      for (const auto& r : j["unitroot"]) {
        UnitRootRow row{r["label"].get<std::string>(), std::nullopt, std::nullopt};
        if (!r["ips"].is_null()) {
          IpsResult ips;
          ips.w_stat = r["ips"]["w_stat"].get<double>();
          ips.t_bar = r["ips"]["t_bar"].get<double>();
          ips.p_value = r["ips"]["p_value"].get<double>();
          ips.n_series = r["ips"]["n_series"].get<int>();
          row.ips = ips;
        }
        if (!r["fisher"].is_null()) {
          FisherResult f;
          f.statistic = r["fisher"]["statistic"].get<double>();
          f.df = r["fisher"]["df"].get<int>();
          f.p_value = r["fisher"]["p_value"].get<double>();
          row.fisher = f;
        }
        rows.push_back(std::move(row));
      }
      if (!rows.empty()) out += render_unitroot_table(rows, format) + "\n";
    }
    if (j.contains("estimates")) {
      std::vector<EstimationResult> results;
      for (const auto& r : j["estimates"]) {
        EstimationResult e;
        e.method = parse_method(r["method"].get<std::string>());
        e.names = r["names"].get<std::vector<std::string>>();
        e.coefficients = detail::json_vector(r["coefficients"]);
        e.std_errors = detail::json_vector(r["std_errors"]);
        e.n_obs = r["n_obs"].get<std::size_t>();
        e.r_squared = r["r_squared"].get<double>();
        e.intercept_name = r["intercept_name"].get<std::string>();
        results.push_back(std::move(e));
      }
      CoefficientTableOptions opt;
      opt.format = format;
      opt.labels = j["labels"].get<std::map<std::string, std::string>>();
      if (!j["hausman"].is_null()) {
        TestResult t;
        t.statistic = j["hausman"]["statistic"].get<double>();
        t.df = j["hausman"]["df"].get<int>();
        t.p_value = j["hausman"]["p_value"].get<double>();
        t.flags = j["hausman"]["flags"].get<std::set<std::string>>();
        opt.hausman = t;
        out += render_coefficient_table(results, j["order"].get<std::vector<std::string>>(), opt) + "\n";
        out += render_hausman_block(t, j["hausman"]["names"].get<std::vector<std::string>>(),
                                    detail::json_vector(j["hausman"]["b"]), detail::json_vector(j["hausman"]["B"]),
                                    detail::json_vector(j["hausman"]["se_diff"]), format);
      } else {
        out += render_coefficient_table(results, j["order"].get<std::vector<std::string>>(), opt);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed results.json: ") + e.what());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Entry points

enum class Stage { ingest, unitroot, estimate, run };

namespace detail {

inline std::string escape_message(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out;
}

}  // namespace detail

/// Prints the one-line machine-readable failure summary and returns its code.
inline int report_failure(std::ostream& diag, int code, const char* kind, const std::string& msg) {
  diag << "error code=" << code << " kind=" << kind << " msg=\"" << detail::escape_message(msg) << "\"\n";
  return code;
}

/// Maps an in-flight exception onto the exit-code contract.
template <class F>
int guarded(std::ostream& diag, F&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    return report_failure(diag, kExitConfig, "config", e.what());
  } catch (const DataError& e) {
    return report_failure(diag, kExitData, "data", e.what());
  } catch (const NumericalError& e) {
    return report_failure(diag, kExitNumerical, "numerical", e.what());
  } catch (const spdlog::spdlog_ex& e) {
    return report_failure(diag, kExitConfig, "config", e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return report_failure(diag, kExitData, "data", e.what());
  } catch (const std::exception& e) {
    return report_failure(diag, kExitInternal, "internal", e.what());
  }
}

/// Runs one stage (or the whole chain) for a parsed configuration.
inline int run_stage(RunConfig cfg, Stage stage, std::ostream& diag = std::cerr) {
  return guarded(diag, [&] {
    auto log = make_run_logger(cfg.output_dir, cfg.log_level, diag);
    log->info("variant {}", to_string(cfg.dataset));
    const auto data = load_dataset(cfg, log, diag);
    std::optional<UnitRootOutcome> u;
    std::optional<EstimationOutcome> e;
    if (stage == Stage::ingest) {
      std::ofstream panel(cfg.output_dir / "panel.csv", std::ios::binary);
      write_panel_csv(data.panel, panel);
      log->info("wrote {}", (cfg.output_dir / "panel.csv").string());
      return static_cast<int>(kExitOk);
    }
    if ((stage == Stage::unitroot || stage == Stage::run) && cfg.unitroot.enabled) {
      u = run_unitroot_stage(data.panel, cfg.unitroot, log);
      write_unitroot_artifacts(cfg, *u);
    }
    if (stage == Stage::estimate || stage == Stage::run) {
      e = run_estimation_stage(data.panel, cfg, log);
      write_estimation_artifacts(cfg, *e);
    }
    if (stage == Stage::run) {
      detail::write_text(cfg.output_dir / "results.json", results_json(cfg, data, u, e).dump(2) + "\n");
    }
    log->info("done");
    return static_cast<int>(kExitOk);
  });
}

/// Full pipeline from a config file; returns the process exit code.
inline int run_pipeline(const std::filesystem::path& config_path, const RunOverrides& overrides = {},
                        std::ostream& diag = std::cerr) {
  RunConfig cfg;
  const int rc = guarded(diag, [&] {
    cfg = load_run_config(config_path);
    apply_overrides(cfg, overrides);
    return static_cast<int>(kExitOk);
  });
  if (rc != kExitOk) return rc;
  return run_stage(std::move(cfg), Stage::run, diag);
}

}  // namespace gravity
