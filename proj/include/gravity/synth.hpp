#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gravity/errors.hpp"
#include "gravity/model.hpp"
#include "gravity/panel.hpp"
#include "gravity/random.hpp"

namespace gravity {

/// Synthetic data-generating process settings.
///
/// Gravity DGP, for entity i and period t (all logs):
///   gdp_exporter_t  = 26 + 0.1 w_t            common to every entity
///   gdp_importer_it = 24 + 1.5 a_i + 0.2 w_it
///   fx_it           = 0.5 b_i + 0.3 w_it
///   distance_i      = log U(500, 20000)
///   language_i      = 1 when i mod 3 == 0
///   mercosur_it     = 1 when i mod 4 == 1 and t >= a random accession year
///   exports_it      = beta'x_it + u_i + e_it
/// with a_i, b_i ~ N(0,1), w an AR(1) with coefficient 0.5 started from its
/// stationary law (a Gaussian random walk for variables listed in
/// `unit_root`), u_i = sigma_entity (c a_i + sqrt(1-c^2) N(0,1)) for
/// c = effect_correlation, and e_it ~ N(0, sigma_idio^2). Levels are stored.
///
/// Endogenous DGP (no logs, pooled):
///   x_exog ~ N(0,1), z1 ~ N(0,1), v ~ N(0,1), eta ~ N(0,1)
///   x_endog = s z1 + sqrt(1-s^2) v              s = instrument_strength
///   e       = sigma_idio (rho v + sqrt(1-rho^2) eta)
///   z2      = N(0,1) + invalid_instrument * e / sigma_idio
///   y       = beta'(1, x_endog, x_exog) + u_i + e
struct DgpConfig {
  std::size_t n_entities = 30;
  std::size_t n_periods = 10;
  int first_year = 2006;
  std::map<std::string, double> beta_true;  // overrides of the defaults
  double sigma_entity = 1.0;
  double sigma_idio = 0.5;
  double effect_correlation = 0.0;
  double endogeneity_rho = 0.0;
  double instrument_strength = 0.8;
  double invalid_instrument = 0.0;
  std::set<std::string> unit_root;
  std::uint64_t seed = 42;

  void validate() const {
    if (n_entities < 2) throw ConfigError("synthetic: n_entities must be at least 2");
    if (n_periods < 2) throw ConfigError("synthetic: n_periods must be at least 2");
    if (n_entities > 17000) throw ConfigError("synthetic: n_entities too large for 3-letter codes");
    if (!(sigma_entity >= 0.0) || !(sigma_idio >= 0.0))
      throw ConfigError("synthetic: sigma_entity and sigma_idio must be >= 0");
    if (!(std::abs(effect_correlation) <= 1.0))
      throw ConfigError("synthetic: effect_correlation must lie in [-1, 1]");
    if (!(std::abs(endogeneity_rho) <= 1.0))
      throw ConfigError("synthetic: endogeneity_rho must lie in [-1, 1]");
    if (!(instrument_strength >= 0.0 && instrument_strength <= 1.0))
      throw ConfigError("synthetic: instrument_strength must lie in [0, 1]");
    if (!std::isfinite(invalid_instrument)) throw ConfigError("synthetic: invalid_instrument must be finite");
    for (const auto& [k, v] : beta_true)
      if (!std::isfinite(v)) throw ConfigError("synthetic: beta_true." + k + " is not finite");
  }
};

struct SyntheticPanel {
  PanelDataset panel;
  std::map<std::string, double> truth;  // column name -> coefficient
};

inline const std::map<std::string, double>& default_gravity_beta() {
  static const std::map<std::string, double> b{
      {"const", 1.0},       {"ln_gdp_exporter", 0.6}, {"ln_gdp_importer", 0.8}, {"ln_fx", -0.1},
      {"ln_distance", -1.2}, {"language", 0.5},       {"mercosur", 0.3}};
  return b;
}

inline const std::map<std::string, double>& default_endogenous_beta() {
  static const std::map<std::string, double> b{{"const", 0.5}, {"x_endog", 1.0}, {"x_exog", -0.5}};
  return b;
}

/// Three-letter partner codes AAA, AAB, ... skipping the reporter's code.
inline std::vector<std::string> synthetic_partner_codes(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t k = 0; out.size() < n; ++k) {
    std::string code(3, 'A');
    std::size_t v = k;
    for (int pos = 2; pos >= 0; --pos) {
      code[static_cast<std::size_t>(pos)] = static_cast<char>('A' + v % 26);
      v /= 26;
    }
    if (code != "PER") out.push_back(code);
  }
  return out;
}

namespace detail {

inline std::map<std::string, double> merged_beta(const std::map<std::string, double>& defaults,
                                                 const std::map<std::string, double>& overrides) {
  auto out = defaults;
  for (const auto& [k, v] : overrides) {
    if (!defaults.count(k)) throw ConfigError("synthetic: beta_true names unknown coefficient '" + k + "'");
    out[k] = v;
  }
  return out;
}

/// AR(1) path with coefficient 0.5, or a random walk.
inline std::vector<double> latent_path(Rng& rng, std::size_t n, bool unit_root) {
  std::vector<double> w(n);
  const double phi = 0.5;
  double prev = unit_root ? rng.normal() : rng.normal() / std::sqrt(1.0 - phi * phi);
  for (std::size_t t = 0; t < n; ++t) {
    prev = (unit_root ? prev : phi * prev) + rng.normal();
    w[t] = prev;
  }
  return w;
}

}  // namespace detail

/// Log-linear gravity panel with known coefficients (see DgpConfig).
inline SyntheticPanel generate_gravity_panel(const DgpConfig& cfg) {
  cfg.validate();
  for (const auto& v : cfg.unit_root) {
    if (v != "gdp_exporter" && v != "gdp_importer" && v != "fx")
      throw ConfigError("synthetic: unit_root names unknown variable '" + v + "'");
  }
  const auto beta = detail::merged_beta(default_gravity_beta(), cfg.beta_true);
  const auto codes = synthetic_partner_codes(cfg.n_entities);
  const std::size_t N = cfg.n_entities;
  const std::size_t T = cfg.n_periods;

  auto r_exp = Rng::stream(cfg.seed, "gdp_exporter");
  auto r_imp = Rng::stream(cfg.seed, "gdp_importer");
  auto r_fx = Rng::stream(cfg.seed, "fx");
  auto r_dist = Rng::stream(cfg.seed, "distance");
  auto r_merc = Rng::stream(cfg.seed, "mercosur");
  auto r_level = Rng::stream(cfg.seed, "entity_levels");
  auto r_u = Rng::stream(cfg.seed, "entity_effect");
  auto r_e = Rng::stream(cfg.seed, "idiosyncratic");

  const auto w_exp = detail::latent_path(r_exp, T, cfg.unit_root.count("gdp_exporter") > 0);
  const double c = cfg.effect_correlation;

  std::vector<Observation> obs;
  obs.reserve(N * T * 7);
  for (std::size_t i = 0; i < N; ++i) {
    const EntityId id{"PER", codes[i]};
    const double a = r_level.normal();
    const double b = r_level.normal();
    const double u = cfg.sigma_entity * (c * a + std::sqrt(1.0 - c * c) * r_u.normal());
    const double ln_dist = std::log(r_dist.uniform(500.0, 20000.0));
    const double language = i % 3 == 0 ? 1.0 : 0.0;
    const bool in_bloc = i % 4 == 1;
    const long accession = r_merc.uniform_int(cfg.first_year, cfg.first_year + static_cast<long>(T) - 1);
    const auto w_imp = detail::latent_path(r_imp, T, cfg.unit_root.count("gdp_importer") > 0);
    const auto w_fx = detail::latent_path(r_fx, T, cfg.unit_root.count("fx") > 0);

    for (std::size_t t = 0; t < T; ++t) {
      const int year = cfg.first_year + static_cast<int>(t);
      const double ln_gdp_exp = 26.0 + 0.1 * w_exp[t];
      const double ln_gdp_imp = 24.0 + 1.5 * a + 0.2 * w_imp[t];
      const double ln_fx = 0.5 * b + 0.3 * w_fx[t];
      const double mercosur = in_bloc && year >= accession ? 1.0 : 0.0;
      const double ln_y = beta.at("const") + beta.at("ln_gdp_exporter") * ln_gdp_exp +
                          beta.at("ln_gdp_importer") * ln_gdp_imp + beta.at("ln_fx") * ln_fx +
                          beta.at("ln_distance") * ln_dist + beta.at("language") * language +
                          beta.at("mercosur") * mercosur + u + cfg.sigma_idio * r_e.normal();
      const TimeIndex ti{year};
      obs.push_back({id, ti, "exports", std::exp(ln_y)});
      obs.push_back({id, ti, "gdp_exporter", std::exp(ln_gdp_exp)});
      obs.push_back({id, ti, "gdp_importer", std::exp(ln_gdp_imp)});
      obs.push_back({id, ti, "fx", std::exp(ln_fx)});
      obs.push_back({id, ti, "distance", std::exp(ln_dist)});
      obs.push_back({id, ti, "language", language});
      obs.push_back({id, ti, "mercosur", mercosur});
    }
  }
  SyntheticPanel out;
  out.panel = build_panel(obs, {{"exports", Unit::usd},
                                {"gdp_exporter", Unit::usd},
                                {"gdp_importer", Unit::usd},
                                {"fx", Unit::ratio},
                                {"distance", Unit::km},
                                {"language", Unit::dummy},
                                {"mercosur", Unit::dummy}});
  out.truth = beta;
  return out;
}

/// Panel with one endogenous regressor and excluded instruments z1 (valid)
/// and z2 (invalid when `invalid_instrument` is non-zero).
inline SyntheticPanel generate_endogenous_panel(const DgpConfig& cfg) {
  cfg.validate();
  const auto beta = detail::merged_beta(default_endogenous_beta(), cfg.beta_true);
  const auto codes = synthetic_partner_codes(cfg.n_entities);
  const double s = cfg.instrument_strength;
  const double rho = cfg.endogeneity_rho;

  auto r_exog = Rng::stream(cfg.seed, "x_exog");
  auto r_z1 = Rng::stream(cfg.seed, "z1");
  auto r_z2 = Rng::stream(cfg.seed, "z2");
  auto r_v = Rng::stream(cfg.seed, "first_stage_error");
  auto r_eta = Rng::stream(cfg.seed, "structural_error");
  auto r_u = Rng::stream(cfg.seed, "entity_effect");

  std::vector<Observation> obs;
  for (std::size_t i = 0; i < cfg.n_entities; ++i) {
    const EntityId id{"PER", codes[i]};
    const double u = cfg.sigma_entity * r_u.normal();
    for (std::size_t t = 0; t < cfg.n_periods; ++t) {
      const TimeIndex ti{cfg.first_year + static_cast<int>(t)};
      const double x_exog = r_exog.normal();
      const double z1 = r_z1.normal();
      const double v = r_v.normal();
      const double eta = r_eta.normal();
      const double x = s * z1 + std::sqrt(1.0 - s * s) * v;
      const double std_err = rho * v + std::sqrt(1.0 - rho * rho) * eta;
      const double z2 = r_z2.normal() + cfg.invalid_instrument * std_err;
      const double y = beta.at("const") + beta.at("x_endog") * x + beta.at("x_exog") * x_exog + u +
                       cfg.sigma_idio * std_err;
      obs.push_back({id, ti, "y", y});
      obs.push_back({id, ti, "x_endog", x});
      obs.push_back({id, ti, "x_exog", x_exog});
      obs.push_back({id, ti, "z1", z1});
      obs.push_back({id, ti, "z2", z2});
    }
  }
  SyntheticPanel out;
  out.panel = build_panel(obs);
  out.truth = beta;
  return out;
}

/// Model matching generate_gravity_panel: log exports on the logged
/// regressors plus the two dummies.
inline ModelSpec synthetic_model_spec() {
  ModelSpec m;
  m.dependent = parse_term("log(exports)");
  for (const char* t : {"log(gdp_exporter)", "log(gdp_importer)", "log(fx)", "log(distance)",
                        "dummy(language)", "dummy(mercosur)"})
    m.regressors.push_back(parse_term(t));
  m.regressors[0].label = "Peru's GDP";
  m.regressors[1].label = "Importer's GDP";
  m.regressors[2].label = "Real exchange rate";
  m.regressors[3].label = "Distance";
  m.regressors[4].label = "Common official language";
  m.regressors[5].label = "MERCOSUR";
  m.estimator_chain = {EstimatorTag::fixed_effects, EstimatorTag::random_effects, EstimatorTag::hausman,
                       EstimatorTag::iv_gmm};
  return m;
}

/// Model matching generate_endogenous_panel; `overidentified` adds z2.
inline ModelSpec endogenous_model_spec(bool overidentified) {
  ModelSpec m;
  m.dependent = parse_term("y");
  m.regressors = {parse_term("x_endog"), parse_term("x_exog")};
  m.instruments = {parse_term("z1")};
  if (overidentified) m.instruments.push_back(parse_term("z2"));
  m.estimator_chain = {EstimatorTag::pooled_ols, EstimatorTag::iv_gmm};
  return m;
}

}  // namespace gravity
