#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace gravity;

namespace {

EntityId pair(const char* partner) { return EntityId{"PER", partner}; }

/// Two pairs, years 2006..2008, every GMP-style raw variable present.
std::vector<Observation> toy_observations(int first = 2006, int last = 2008) {
  std::vector<Observation> obs;
  int k = 0;
  for (const char* partner : {"CHN", "USA"}) {
    const double dist = partner[0] == 'C' ? 16000.0 : 5600.0;
    for (int y = first; y <= last; ++y, ++k) {
      const EntityId e = pair(partner);
      obs.push_back({e, {y}, "exports", 1e9 * (1.0 + 0.1 * k)});
      obs.push_back({e, {y}, "gdp_exporter", 1.5e11 * (1.0 + 0.05 * (y - first))});
      obs.push_back({e, {y}, "gdp_importer", 1e12 * (1.0 + 0.03 * k * k)});
      obs.push_back({e, {y}, "distance", dist});
      obs.push_back({e, {y}, "language", partner[0] == 'C' ? 0.0 : 1.0});
      obs.push_back({e, {y}, "inflation", 1.03 + 0.001 * k});
    }
  }
  return obs;
}

ModelSpec toy_spec() {
  ModelSpec m;
  m.dependent = parse_term("log(exports)");
  for (const char* t : {"log(gdp_exporter)", "log(gdp_importer)", "log(distance)", "dummy(language)"})
    m.regressors.push_back(parse_term(t));
  return m;
}

const std::map<std::string, Unit> kUnits{{"language", Unit::dummy}};

}  // namespace

TEST(Term, ParsesNestedExpressions) {
  const auto t = parse_term("lag(log(ifl), 2)");
  EXPECT_EQ(t.variable, "ln_ifl_lag2");
  ASSERT_EQ(t.transforms.size(), 2u);
  EXPECT_EQ(t.transforms[0].kind, TransformKind::log);
  EXPECT_EQ(t.transforms[1].kind, TransformKind::lag);
  EXPECT_EQ(t.transforms[1].lag, 2);

  const auto d = parse_term("log(absdiff(gdppc_exporter, gdppc_importer))");
  EXPECT_EQ(d.variable, "ln_absdiff_gdppc_exporter_gdppc_importer");

  const auto dummy = parse_term("dummy(mercosur)");
  EXPECT_EQ(dummy.role, Role::dummy);
  EXPECT_TRUE(dummy.transforms.empty());

  const auto pred = parse_term("dummy(partner=CHN)");
  EXPECT_EQ(pred.variable, "d_partner_CHN");
}

TEST(Term, RejectsMalformed) {
  EXPECT_THROW(parse_term("log(x"), ConfigError);
  EXPECT_THROW(parse_term("sqrt(x)"), ConfigError);
  EXPECT_THROW(parse_term("lag(x)"), ConfigError);
  EXPECT_THROW(parse_term("log(dummy(x))"), ConfigError);
  EXPECT_THROW(parse_term("x y"), ConfigError);
}

TEST(ModelSpec, ValidationRules) {
  auto m = toy_spec();
  EXPECT_NO_THROW(m.validate());
  auto dup = m;
  dup.regressors.push_back(parse_term("log(gdp_importer)"));
  EXPECT_THROW(dup.validate(), ConfigError);
  auto dep = m;
  dep.regressors.push_back(parse_term("log(exports)"));
  EXPECT_THROW(dep.validate(), ConfigError);
  auto logged_dummy = m;
  Term t = parse_term("log(language)");
  t.role = Role::dummy;
  logged_dummy.regressors.push_back(t);
  EXPECT_THROW(logged_dummy.validate(), ConfigError);
}

TEST(DesignMatrix, CompleteToyPanel) {
  const auto obs = toy_observations();
  const auto spec = toy_spec();
  const auto p = design_matrix(prepare_model(build_panel(obs, kUnits), spec), spec);
  EXPECT_EQ(p.n_rows(), 6u);
  EXPECT_TRUE(p.drop_log.empty());
  EXPECT_EQ(p.column_names(),
            (std::vector<std::string>{"const", "ln_gdp_exporter", "ln_gdp_importer", "ln_distance", "language"}));
  EXPECT_TRUE(p.columns[3].time_invariant);
  EXPECT_FALSE(p.columns[1].time_invariant);
  // dummies enter untransformed
  EXPECT_EQ(p.X(3, 4), 1.0);
  EXPECT_EQ(p.X(0, 4), 0.0);
}

TEST(DesignMatrix, LagTwoDropsFirstTwoYears) {
  const auto obs = toy_observations(2006, 2015);
  auto spec = toy_spec();
  spec.regressors.push_back(parse_term("lag(log(inflation), 2)"));
  const auto p = design_matrix(prepare_model(build_panel(obs, kUnits), spec), spec);
  EXPECT_EQ(p.n_rows(), 16u);
  ASSERT_EQ(p.drop_log.size(), 4u);
  for (const auto& d : p.drop_log) {
    EXPECT_EQ(d.reason, "lagged predecessor missing");
    EXPECT_LT(d.time.year, 2008);
  }
}

TEST(DesignMatrix, SingleMissingCellDropsOneRow) {
  auto obs = toy_observations();
  std::erase_if(obs, [](const Observation& o) {
    return o.variable == "gdp_importer" && o.entity.partner == "USA" && o.time.year == 2007;
  });
  const auto spec = toy_spec();
  const auto p = design_matrix(prepare_model(build_panel(obs, kUnits), spec), spec);
  EXPECT_EQ(p.n_rows(), 5u);
  ASSERT_EQ(p.drop_log.size(), 1u);
  EXPECT_EQ(p.drop_log[0].reason, "missing: gdp_importer");
  EXPECT_EQ(p.drop_log[0].entity.partner, "USA");
}

TEST(DesignMatrix, ZeroFlowDroppedAsLogDomain) {
  auto obs = toy_observations();
  for (auto& o : obs)
    if (o.variable == "exports" && o.entity.partner == "CHN" && o.time.year == 2006) o.value = 0.0;
  const auto spec = toy_spec();
  const auto p = design_matrix(prepare_model(build_panel(obs, kUnits), spec), spec);
  ASSERT_EQ(p.drop_log.size(), 1u);
  EXPECT_EQ(p.drop_log[0].reason, "outside log domain: exports");
}

TEST(DesignMatrix, ErrorsOnEmptyAndUnknown) {
  const auto obs = toy_observations();
  auto spec = toy_spec();
  spec.sample_filter = SampleFilter{2050, std::nullopt, {}};
  const auto data = prepare_model(build_panel(obs, kUnits), spec);
  EXPECT_THROW(design_matrix(data, spec), DataError);
  auto unknown = toy_spec();
  unknown.regressors.push_back(parse_term("border"));
  EXPECT_THROW(design_matrix(prepare_model(build_panel(obs, kUnits), unknown), unknown), DataError);
}

TEST(DesignMatrix, RowsAndDropsReconcile) {
  auto obs = toy_observations(2004, 2015);
  std::erase_if(obs, [](const Observation& o) { return o.variable == "gdp_importer" && o.time.year % 3 == 0; });
  auto spec = toy_spec();
  spec.regressors.push_back(parse_term("lag(inflation, 1)"));
  spec.sample_filter = SampleFilter{std::nullopt, 2014, {}};
  const auto panel = prepare_model(build_panel(obs, kUnits), spec);
  const auto p = design_matrix(panel, spec);
  EXPECT_EQ(p.n_rows() + p.drop_log.size(), panel.n_cells());
}

TEST(DesignMatrix, DeterministicUnderInsertionOrder) {
  auto obs = toy_observations(2006, 2012);
  auto shuffled = obs;
  std::mt19937 gen(99);
  std::shuffle(shuffled.begin(), shuffled.end(), gen);
  const auto spec = toy_spec();
  const auto a = design_matrix(prepare_model(build_panel(obs, kUnits), spec), spec);
  const auto b = design_matrix(prepare_model(build_panel(shuffled, kUnits), spec), spec);
  EXPECT_TRUE(a.X == b.X);
  EXPECT_TRUE(a.y == b.y);
}

TEST(DesignMatrix, ScaleCovarianceOfLogColumns) {
  // A strictly positive source scaled by c shifts only its log column by ln c.
  DgpConfig cfg;
  cfg.n_entities = 12;
  cfg.seed = 5;
  const auto s = generate_gravity_panel(cfg);
  std::vector<Observation> scaled_obs;
  const auto& panel = s.panel;
  for (const auto& name : panel.variable_names()) {
    const auto& v = panel.variable(name);
    for (std::size_t e = 0; e < panel.n_entities(); ++e)
      for (std::size_t t = 0; t < panel.n_times(); ++t) {
        const auto c = panel.cell(e, t);
        if (v.state[c] != CellState::present) continue;
        const double f = name == "gdp_importer" ? 1000.0 : 1.0;
        scaled_obs.push_back({panel.entities()[e], panel.times()[t], name, f * v.values[c]});
      }
  }
  const auto scaled = build_panel(scaled_obs, {{"language", Unit::dummy}, {"mercosur", Unit::dummy}});
  auto spec = synthetic_model_spec();
  const auto a = design_matrix(prepare_model(panel, spec), spec);
  const auto b = design_matrix(prepare_model(scaled, spec), spec);
  const Eigen::Index j = static_cast<Eigen::Index>(*a.column_index("ln_gdp_importer"));
  EXPECT_NEAR((b.X.col(j) - a.X.col(j)).maxCoeff(), std::log(1000.0), 1e-9);

  const auto pa = pooled_ols(a);
  const auto pb = pooled_ols(b);
  for (std::size_t k = 1; k < pa.names.size(); ++k)
    EXPECT_NEAR(pa.coefficients[static_cast<Eigen::Index>(k)], pb.coefficients[static_cast<Eigen::Index>(k)], 1e-8)
        << pa.names[k];
  const auto fa = fixed_effects(a);
  const auto fb = fixed_effects(b);
  ASSERT_EQ(fa.names, fb.names);
  for (std::size_t k = 0; k < fa.names.size(); ++k) {
    if (fa.names[k] == kInterceptName) continue;  // recovered constant absorbs ln c
    EXPECT_NEAR(fa.coefficients[static_cast<Eigen::Index>(k)], fb.coefficients[static_cast<Eigen::Index>(k)], 1e-8);
  }
}
