#pragma once

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "gravity/errors.hpp"
#include "gravity/estimators.hpp"
#include "gravity/ingest.hpp"
#include "gravity/model.hpp"
#include "gravity/synth.hpp"
#include "gravity/unitroot.hpp"

namespace gravity {

struct InputPaths {
  std::filesystem::path trade;
  std::filesystem::path indicators;
  std::filesystem::path pair_static;
  std::filesystem::path memberships;
};

/// Optional World Bank download replacing the indicators file.
struct FetchOptions {
  std::string base_url;
  std::vector<std::string> codes;
  std::vector<std::string> countries;
  int per_page = 1000;
};

struct UnitRootVariable {
  Term term;
  std::string label;
};

struct UnitRootOptions {
  bool enabled = true;
  int lags = 1;
  Deterministics deterministics = Deterministics::constant;
  std::vector<UnitRootVariable> variables;
};

enum class Dataset { GMP, CTP, RTP, synthetic };

inline std::string to_string(Dataset d) {
  switch (d) {
    case Dataset::GMP: return "GMP";
    case Dataset::CTP: return "CTP";
    case Dataset::RTP: return "RTP";
    case Dataset::synthetic: return "synthetic";
  }
  return "?";
}

inline Dataset parse_dataset(const std::string& s) {
  if (s == "synthetic") return Dataset::synthetic;
  switch (parse_variant(s)) {
    case Variant::GMP: return Dataset::GMP;
    case Variant::CTP: return Dataset::CTP;
    case Variant::RTP: return Dataset::RTP;
  }
  return Dataset::GMP;
}

inline Variant to_variant(Dataset d) {
  if (d == Dataset::synthetic) throw ConfigError("synthetic runs have no study variant");
  return d == Dataset::GMP ? Variant::GMP : d == Dataset::CTP ? Variant::CTP : Variant::RTP;
}

struct RunConfig {
  Dataset dataset = Dataset::synthetic;
  InputPaths inputs;
  std::optional<FetchOptions> fetch;
  YearWindow window{2006, 2015};
  DgpConfig dgp;
  ModelSpec model;
  GmmSpec gmm;
  UnitRootOptions unitroot;
  double alpha = 0.05;  // Hausman level that triggers IV-GMM
  std::filesystem::path output_dir = "out";
  bool markdown = true;
  bool csv = true;
  std::string log_level = "warn";
};

// ---------------------------------------------------------------------------
// Study defaults

namespace detail {

inline Term labelled(const std::string& expr, const std::string& label) {
  Term t = parse_term(expr);
  t.label = label;
  return t;
}

}  // namespace detail

/// Regressors, labels and estimator chain used for a dataset unless the
/// config overrides them.
inline ModelSpec default_model(Dataset d) {
  using detail::labelled;
  if (d == Dataset::synthetic) return synthetic_model_spec();
  ModelSpec m;
  m.dependent = parse_term("log(exports)");
  m.regressors = {labelled("log(gdp_exporter)", "Peru's GDP"), labelled("log(gdp_importer)", "Importer's GDP")};
  if (d == Dataset::GMP) {
    m.regressors.push_back(labelled("log(gnipc_exporter)", "Peru's per capita income"));
    m.regressors.push_back(labelled("log(gnipc_importer)", "Importer's per capita income"));
  }
  if (d == Dataset::CTP) {
    for (auto [e, l] : std::vector<std::pair<const char*, const char*>>{
             {"log(distance)", "Distance"},
             {"log(fx)", "Real exchange rate"},
             {"dummy(language)", "Common official language"},
             {"dummy(border)", "Common border"},
             {"dummy(ind)", "IND"},
             {"dummy(kor)", "KOR"},
             {"dummy(chl)", "CHL"},
             {"dummy(chn)", "CHN"},
             {"dummy(usa)", "USA"},
             {"dummy(eu)", "EU"},
             {"dummy(jpn)", "JPN"},
             {"lag(log(ifl), 2)", "IFL,lag=2"}})
      m.regressors.push_back(labelled(e, l));
  } else {
    for (auto [e, l] : std::vector<std::pair<const char*, const char*>>{
             {"log(gdppcdif)", "GDP per capita difference"},
             {"log(fx)", "Real exchange rate"},
             {"log(distance)", "Distance"},
             {"dummy(language)", "Common official language"},
             {"dummy(border)", "Common border"},
             {"dummy(apec)", "APEC"},
             {"dummy(can)", "CAN"},
             {"dummy(mercosur)", "MERCOSUR"}})
      m.regressors.push_back(labelled(e, l));
  }
  m.estimator_chain = {EstimatorTag::fixed_effects, EstimatorTag::random_effects, EstimatorTag::hausman,
                       EstimatorTag::iv_gmm};
  return m;
}

/// Exporter GDP treated as endogenous, instrumented by its own first lag.
inline GmmSpec default_gmm() {
  GmmSpec g;
  g.endogenous = {"ln_gdp_exporter"};
  g.instruments = {"ln_gdp_exporter_lag1"};
  return g;
}

inline std::vector<Term> default_gmm_instruments() { return {parse_term("lag(log(gdp_exporter), 1)")}; }

inline std::vector<UnitRootVariable> default_unitroot_variables(Dataset d) {
  std::vector<UnitRootVariable> v{{parse_term("log(gdp_importer)"), "GDP of importer"},
                                  {parse_term("log(gdp_exporter)"), "GDP of exporter"},
                                  {parse_term("log(exports)"), "Tradevalue"}};
  if (d == Dataset::GMP) {
    v.push_back({parse_term("log(gnipc_importer)"), "GNI of importer"});
    v.push_back({parse_term("log(gnipc_exporter)"), "GNI of exporter"});
  }
  v.push_back({parse_term("log(fx)"), "FX"});
  if (d == Dataset::CTP) v.push_back({parse_term("log(ifl)"), "Inflation rate"});
  return v;
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

using boost::property_tree::ptree;

inline std::vector<std::string> split_list(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    const auto a = cur.find_first_not_of(" \t");
    const auto b = cur.find_last_not_of(" \t");
    if (a != std::string::npos) out.push_back(cur.substr(a, b - a + 1));
  }
  return out;
}

class Section {
 public:
  Section(const ptree* node, std::string name) : node_(node), name_(std::move(name)) {}

  bool present() const { return node_ != nullptr; }

  std::optional<std::string> raw(const std::string& key) const {
    if (!node_) return std::nullopt;
    auto it = node_->find(key);
    if (it == node_->not_found()) return std::nullopt;
    return it->second.data();
  }

  std::string str(const std::string& key, const std::string& fallback) const {
    return raw(key).value_or(fallback);
  }

  template <class T>
  T get(const std::string& key, T fallback) const {
    auto v = raw(key);
    if (!v) return fallback;
    try {
      return convert<T>(*v);
    } catch (const std::exception&) {
      throw ConfigError("[" + name_ + "] " + key + ": cannot parse '" + *v + "'");
    }
  }

  std::vector<std::pair<std::string, std::string>> entries() const {
    std::vector<std::pair<std::string, std::string>> out;
    if (node_)
      for (const auto& [k, v] : *node_) out.emplace_back(k, v.data());
    return out;
  }

 private:
  template <class T>
  static T convert(const std::string& s) {
    if constexpr (std::is_same_v<T, bool>) {
      if (s == "true" || s == "yes" || s == "1") return true;
      if (s == "false" || s == "no" || s == "0") return false;
      throw std::invalid_argument("bool");
    } else {
      std::istringstream in(s);
      T v{};
      in >> v;
      if (in.fail() || !(in >> std::ws).eof()) throw std::invalid_argument("value");
      return v;
    }
  }

  const ptree* node_;
  std::string name_;
};

inline Section section(const ptree& root, const std::string& name) {
  auto it = root.find(name);
  return Section(it == root.not_found() ? nullptr : &it->second, name);
}

// The INI reader splits at the first '=', which would land inside predicate
// terms such as dummy(partner=CHN); those are masked before parsing.
inline constexpr char kMaskedEquals = '\x1f';

inline std::string mask_nested_equals(std::istream& in) {
  std::string out;
  for (std::string line; std::getline(in, line);) {
    int depth = 0;
    for (char& c : line) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == '=' && depth > 0) c = kMaskedEquals;
    }
    out += line + "\n";
  }
  return out;
}

inline std::string unmask(std::string s) {
  std::replace(s.begin(), s.end(), kMaskedEquals, '=');
  return s;
}

inline std::vector<Term> terms_of(const Section& s) {
  std::vector<Term> out;
  for (const auto& [expr, label] : s.entries()) {
    Term t = parse_term(unmask(expr));
    t.label = unmask(label);
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace detail

/// Parses a run configuration. Relative paths resolve against `base_dir`.
inline RunConfig parse_run_config(std::istream& in, const std::filesystem::path& base_dir = {}) {
  detail::ptree root;
  try {
    std::istringstream masked(detail::mask_nested_equals(in));
    boost::property_tree::read_ini(masked, root);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  static const std::set<std::string> known{"run",     "inputs",      "worldbank", "synthetic", "beta",
                                           "model",   "regressors",  "instruments", "gmm",     "unitroot",
                                           "unitroot.variables"};
  for (const auto& [name, node] : root) {
    if (!known.count(name)) throw ConfigError("config: unknown section [" + name + "]");
  }
  auto resolve = [&](const std::string& p) {
    std::filesystem::path path(p);
    return path.is_relative() && !base_dir.empty() ? base_dir / path : path;
  };

  RunConfig cfg;
  const auto run = detail::section(root, "run");
  if (!run.raw("variant")) throw ConfigError("config: [run] variant is required");
  cfg.dataset = parse_dataset(*run.raw("variant"));
  cfg.output_dir = resolve(run.str("output_dir", "out"));
  cfg.alpha = run.get<double>("alpha", 0.05);
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) throw ConfigError("config: [run] alpha must lie in (0, 1)");
  cfg.log_level = run.str("log_level", "warn");
  if (auto f = run.raw("formats")) {
    cfg.markdown = cfg.csv = false;
    for (const auto& x : detail::split_list(*f)) {
      if (x == "markdown") {
        cfg.markdown = true;
      } else if (x == "csv") {
        cfg.csv = true;
      } else {
        throw ConfigError("config: [run] formats accepts markdown and csv, got '" + x + "'");
      }
    }
  }

  if (cfg.dataset == Dataset::synthetic) {
    const auto s = detail::section(root, "synthetic");
    auto& d = cfg.dgp;
    d.n_entities = s.get<std::size_t>("n_entities", d.n_entities);
    d.n_periods = s.get<std::size_t>("n_periods", d.n_periods);
    d.first_year = s.get<int>("first_year", d.first_year);
    d.sigma_entity = s.get<double>("sigma_entity", d.sigma_entity);
    d.sigma_idio = s.get<double>("sigma_idio", d.sigma_idio);
    d.effect_correlation = s.get<double>("effect_correlation", d.effect_correlation);
    d.endogeneity_rho = s.get<double>("endogeneity_rho", d.endogeneity_rho);
    d.instrument_strength = s.get<double>("instrument_strength", d.instrument_strength);
    d.invalid_instrument = s.get<double>("invalid_instrument", d.invalid_instrument);
    d.seed = s.get<std::uint64_t>("seed", d.seed);
    if (auto u = s.raw("unit_root"))
      for (const auto& v : detail::split_list(*u)) d.unit_root.insert(v);
    for (const auto& [k, v] : detail::section(root, "beta").entries()) {
      try {
        d.beta_true[k] = std::stod(v);
      } catch (const std::exception&) {
        throw ConfigError("config: [beta] " + k + ": cannot parse '" + v + "'");
      }
    }
    d.validate();
    cfg.window = {d.first_year, d.first_year + static_cast<int>(d.n_periods) - 1};
  } else {
    const auto s = detail::section(root, "inputs");
    auto need = [&](const char* key) {
      auto v = s.raw(key);
      if (!v) throw ConfigError(std::string("config: [inputs] ") + key + " is required");
      return resolve(*v);
    };
    cfg.inputs.trade = need("trade");
    cfg.inputs.pair_static = need("pair_static");
    cfg.inputs.memberships = need("memberships");
    const auto def = default_window(to_variant(cfg.dataset));
    cfg.window = {s.get<int>("first_year", def.first), s.get<int>("last_year", def.last)};
    if (cfg.window.first > cfg.window.last) throw ConfigError("config: [inputs] first_year > last_year");

    const auto wb = detail::section(root, "worldbank");
    if (wb.present()) {
      FetchOptions f;
      f.base_url = wb.str("base_url", "https://api.worldbank.org/v2");
      f.codes = detail::split_list(wb.str("indicators", ""));
      f.countries = detail::split_list(wb.str("countries", ""));
      f.per_page = wb.get<int>("per_page", 1000);
      if (f.codes.empty()) throw ConfigError("config: [worldbank] indicators is required");
      if (f.countries.empty()) throw ConfigError("config: [worldbank] countries is required");
      cfg.fetch = f;
    } else {
      cfg.inputs.indicators = need("indicators");
    }
  }

  cfg.model = default_model(cfg.dataset);
  const auto model = detail::section(root, "model");
  if (auto dep = model.raw("dependent")) cfg.model.dependent = parse_term(*dep);
  cfg.model.include_intercept = model.get<bool>("intercept", true);
  if (auto chain = model.raw("estimators")) {
    cfg.model.estimator_chain.clear();
    for (const auto& e : detail::split_list(*chain)) cfg.model.estimator_chain.push_back(parse_estimator_tag(e));
  }
  if (model.raw("first_year") || model.raw("last_year") || model.raw("partners")) {
    SampleFilter f;
    if (model.raw("first_year")) f.first_year = model.get<int>("first_year", 0);
    if (model.raw("last_year")) f.last_year = model.get<int>("last_year", 0);
    for (const auto& p : detail::split_list(model.str("partners", ""))) f.partners.insert(p);
    cfg.model.sample_filter = f;
  }
  const auto regs = detail::section(root, "regressors");
  if (regs.present()) cfg.model.regressors = detail::terms_of(regs);
  if (cfg.model.regressors.empty()) throw ConfigError("config: model has no regressors");
  cfg.model.validate();

  const auto inst = detail::section(root, "instruments");
  cfg.model.instruments = inst.present() ? detail::terms_of(inst) : default_gmm_instruments();
  cfg.gmm = default_gmm();
  const auto gmm = detail::section(root, "gmm");
  if (auto e = gmm.raw("endogenous")) cfg.gmm.endogenous = detail::split_list(*e);
  if (auto i = gmm.raw("instruments")) {
    cfg.gmm.instruments = detail::split_list(*i);
  } else if (inst.present()) {
    cfg.gmm.instruments.clear();
    for (const auto& t : cfg.model.instruments) cfg.gmm.instruments.push_back(t.variable);
  }
  const auto w = gmm.str("weighting", "two_step_robust");
  if (w == "two_step_robust") {
    cfg.gmm.weighting = GmmWeighting::two_step_robust;
  } else if (w == "homoskedastic") {
    cfg.gmm.weighting = GmmWeighting::homoskedastic;
  } else {
    throw ConfigError("config: [gmm] weighting must be two_step_robust or homoskedastic");
  }

  const auto ur = detail::section(root, "unitroot");
  cfg.unitroot.enabled = ur.get<bool>("enabled", true);
  cfg.unitroot.lags = ur.get<int>("lags", 1);
  if (cfg.unitroot.lags < 0) throw ConfigError("config: [unitroot] lags must be >= 0");
  cfg.unitroot.deterministics = parse_deterministics(ur.str("deterministics", "constant"));
  const auto urv = detail::section(root, "unitroot.variables");
  if (urv.present()) {
    for (const auto& [expr, label] : urv.entries())
      cfg.unitroot.variables.push_back({parse_term(detail::unmask(expr)), detail::unmask(label)});
  } else {
    cfg.unitroot.variables = default_unitroot_variables(cfg.dataset);
  }
  return cfg;
}

inline RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  return parse_run_config(in, path.parent_path());
}

}  // namespace gravity
