#include <gtest/gtest.h>

#include "support.hpp"

using namespace gravity;

namespace {

RegressionProblem toy_fe_problem() {
  RegressionProblem p;
  p.columns = {{"x", "", Role::continuous, false, false}};
  p.X.resize(4, 1);
  p.X << 1.0, 2.0, 4.0, 6.0;
  p.y.resize(4);
  p.y << 1.0, 3.0, 2.0, 6.0;
  p.row_keys = {{EntityId{"PER", "AAA"}, {2000}},
                {EntityId{"PER", "AAA"}, {2001}},
                {EntityId{"PER", "BBB"}, {2000}},
                {EntityId{"PER", "BBB"}, {2001}}};
  return p;
}

/// Same design as random_problem without intercept or time-invariant columns.
RegressionProblem varying_only(const RegressionProblem& p) {
  RegressionProblem q = p;
  q.X = p.X.middleCols(1, p.X.cols() - 2).eval();
  q.columns = std::vector<ColumnMeta>(p.columns.begin() + 1, p.columns.end() - 1);
  return q;
}

void expect_psd(const Eigen::MatrixXd& v) {
  EXPECT_LE((v - v.transpose()).cwiseAbs().maxCoeff(), 0.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(v);
  EXPECT_GE(eig.eigenvalues().minCoeff(), -1e-10 * std::max(1.0, eig.eigenvalues().maxCoeff()));
}

}  // namespace

TEST(FixedEffects, HandComputedToySlope) {
  const auto r = fixed_effects(toy_fe_problem());
  ASSERT_EQ(r.names, std::vector<std::string>{"x"});
  EXPECT_NEAR(r.coefficients[0], 2.0, 1e-12);
  EXPECT_EQ(r.df_resid, 1);
}

TEST(FixedEffects, EqualsLsdvOnRandomPanels) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto p = testkit::random_problem(seed, 6 + static_cast<int>(seed % 5), 2, 8, 3);
    const auto fe = fixed_effects(p);
    const Eigen::VectorXd oracle = testkit::lsdv_slopes(p, {1, 2, 3});
    for (int j = 0; j < 3; ++j)
      EXPECT_NEAR(fe.coefficient("x" + std::to_string(j)), oracle[j], 1e-8) << "seed " << seed;
  }
}

TEST(FixedEffects, DropsTimeInvariantRandomEffectsKeeps) {
  const auto p = testkit::random_problem(3, 30, 4, 8);
  const auto fe = fixed_effects(p);
  const auto re = random_effects(p);
  EXPECT_FALSE(fe.has("dist"));
  EXPECT_TRUE(re.has("dist"));
  EXPECT_TRUE(fe.has(kInterceptName));  // recovered constant
  EXPECT_TRUE(re.time_invariant.count("dist"));
}

TEST(FixedEffects, InvariantToEntityConstantShifts) {
  const auto p = testkit::random_problem(21, 10, 3, 6, 2);
  auto shifted = p;
  const auto g = group_rows(p.row_keys);
  for (Eigen::Index r = 0; r < p.X.rows(); ++r) {
    const double c = 3.0 * static_cast<double>(g.group_of_row[r]) - 7.0;
    shifted.X(r, 1) += c;
    shifted.X(r, 2) -= 0.5 * c;
  }
  const auto a = fixed_effects(p);
  const auto b = fixed_effects(shifted);
  EXPECT_NEAR(a.coefficient("x0"), b.coefficient("x0"), 1e-10);
  EXPECT_NEAR(a.coefficient("x1"), b.coefficient("x1"), 1e-10);
}

TEST(FixedEffects, WithinOrthogonality) {
  const auto p = testkit::random_problem(9, 12);
  const auto w = demean_within(p);
  const auto fe = fixed_effects(p);
  const double rel = (w.problem.X.transpose() * fe.residuals).norm() / (w.problem.X.norm() * w.problem.y.norm());
  EXPECT_LE(rel, 1e-8);
  expect_psd(fe.covariance);
}

TEST(RandomEffects, ClampedComponentEqualsPooled) {
  // Noise with zero entity means makes the between fit exact, so sigma2_u < 0.
  auto p = testkit::random_problem(17, 12, 3, 7);
  const auto g = group_rows(p.row_keys);
  auto rng = Rng::stream(17, "noise");
  Eigen::MatrixXd noise(p.y.size(), 1);
  for (Eigen::Index r = 0; r < noise.rows(); ++r) noise(r, 0) = rng.normal();
  const Eigen::MatrixXd m = group_means(g, noise);
  for (Eigen::Index r = 0; r < noise.rows(); ++r) noise(r, 0) -= m(static_cast<Eigen::Index>(g.group_of_row[r]), 0);
  const Eigen::Vector4d beta(0.3, 1.0, 1.5, -0.8);
  p.y = p.X * beta + noise.col(0);

  const auto re = random_effects(p);
  const auto ols = pooled_ols(p);
  ASSERT_TRUE(re.flags.count("clamped_negative"));
  EXPECT_EQ(re.extras.at("sigma2_entity"), 0.0);
  EXPECT_LE((re.coefficients - ols.coefficients).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LE((re.std_errors - ols.std_errors).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(RandomEffects, UnitLambdaMatchesFixedEffects) {
  const auto p = varying_only(testkit::random_problem(4, 15, 3, 9, 3));
  VarianceComponents vc;
  vc.sigma2_idiosyncratic = 1.0;
  vc.sigma2_entity = 1.0;
  for (const auto& k : p.row_keys) vc.lambda_per_entity[k.entity] = 1.0;
  const auto re = random_effects(p, vc);
  const auto fe = fixed_effects(p);
  for (const auto& n : fe.names) EXPECT_NEAR(re.coefficient(n), fe.coefficient(n), 1e-10) << n;
}

TEST(RandomEffects, LambdaFormula) {
  EXPECT_DOUBLE_EQ(re_lambda(1.0, 0.0, 10), 0.0);
  EXPECT_DOUBLE_EQ(re_lambda(1.0, 1.0, 3), 0.5);
  for (std::size_t t = 1; t < 40; ++t) {
    const double l = re_lambda(0.7, 0.3, t);
    EXPECT_GE(l, 0.0);
    EXPECT_LE(l, 1.0);
  }
}

TEST(RandomEffects, ApproachesFixedEffectsWithLargeEntityVariance) {
  DgpConfig cfg;
  cfg.n_entities = 30;
  cfg.n_periods = 50;
  cfg.first_year = 1950;
  cfg.sigma_entity = 5.0;
  cfg.seed = 77;
  const auto s = generate_gravity_panel(cfg);
  const auto spec = synthetic_model_spec();
  const auto p = design_matrix(prepare_model(s.panel, spec), spec);
  const auto fe = fixed_effects(p);
  const auto re = random_effects(p);
  for (const char* n : {"ln_gdp_importer", "ln_fx", "ln_gdp_exporter"})
    EXPECT_NEAR(re.coefficient(n), fe.coefficient(n), 0.05) << n;
  expect_psd(re.covariance);
}

TEST(RandomEffects, BetweenRegressionInfeasible) {
  const auto p = testkit::random_problem(2, 4, 3, 5);  // 4 entities, 4 columns
  EXPECT_THROW(random_effects(p), NumericalError);
}

TEST(IvGmm, JustIdentifiedWithZEqualXIsOls) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto p = testkit::random_problem(seed, 20, 3, 8);
    const auto ols = pooled_ols(p);
    for (auto w : {GmmWeighting::homoskedastic, GmmWeighting::two_step_robust}) {
      GmmSpec spec;
      spec.weighting = w;
      const auto g = iv_gmm(p, spec);
      EXPECT_LE((g.coefficients - ols.coefficients).cwiseAbs().maxCoeff(), 1e-8);
      EXPECT_EQ(g.extras.at("hansen_j"), 0.0);
      expect_psd(g.covariance);
    }
  }
}

TEST(IvGmm, RobustCovarianceMatchesSandwichWhenJustIdentified) {
  const auto p = testkit::random_problem(12, 25, 3, 8);
  const auto g = iv_gmm(p, GmmSpec{});
  const Eigen::MatrixXd v = robust_covariance(p.X, p.y - p.X * g.coefficients, true);
  EXPECT_LE((g.covariance - v).cwiseAbs().maxCoeff(), 1e-10 * v.cwiseAbs().maxCoeff());
}

TEST(IvGmm, StepTwoFirstOrderConditions) {
  DgpConfig cfg;
  cfg.n_entities = 40;
  cfg.sigma_entity = 0.0;
  cfg.endogeneity_rho = 0.5;
  cfg.invalid_instrument = 0.3;
  cfg.seed = 8;
  const auto s = generate_endogenous_panel(cfg);
  const auto spec = endogenous_model_spec(true);
  const auto p = design_matrix(prepare_model(s.panel, spec), spec);
  GmmSpec gs{{"x_endog"}, {"z1", "z2"}, GmmWeighting::two_step_robust};
  const auto g = iv_gmm(p, gs);

  // Independent 2SLS -> S -> step-2 first-order condition.
  Eigen::MatrixXd Z(p.X.rows(), 4);
  Z << p.X.col(0), p.X.col(2), p.Z.col(0), p.Z.col(1);
  const Eigen::MatrixXd pz = Z * (Z.transpose() * Z).inverse() * Z.transpose();
  const Eigen::VectorXd b1 = (p.X.transpose() * pz * p.X).inverse() * (p.X.transpose() * pz * p.y);
  const Eigen::VectorXd e1 = p.y - p.X * b1;
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(4, 4);
  for (Eigen::Index r = 0; r < Z.rows(); ++r) S += e1[r] * e1[r] * Z.row(r).transpose() * Z.row(r);
  S /= static_cast<double>(Z.rows());
  const Eigen::MatrixXd W = S.inverse();
  const Eigen::VectorXd b2 = (p.X.transpose() * Z * W * Z.transpose() * p.X)
                                 .inverse() * (p.X.transpose() * Z * W * Z.transpose() * p.y);
  EXPECT_LE((g.coefficients - b2).cwiseAbs().maxCoeff(), 1e-8);

  const Eigen::VectorXd foc = p.X.transpose() * Z * W * (Z.transpose() * g.residuals) / static_cast<double>(Z.rows());
  EXPECT_LE(foc.norm(), 1e-6);
  EXPECT_GT(g.extras.at("hansen_j_df"), 0.0);
}

TEST(IvGmm, OrderConditionAndRank) {
  DgpConfig cfg;
  cfg.seed = 3;
  const auto s = generate_endogenous_panel(cfg);
  auto spec = endogenous_model_spec(false);
  const auto p = design_matrix(prepare_model(s.panel, spec), spec);
  EXPECT_THROW(iv_gmm(p, GmmSpec{{"x_endog"}, {}, GmmWeighting::two_step_robust}), ConfigError);
  EXPECT_THROW(iv_gmm(p, GmmSpec{{"nope"}, {"z1"}, GmmWeighting::two_step_robust}), ConfigError);
  EXPECT_THROW(iv_gmm(p, GmmSpec{{"x_endog"}, {"x_exog"}, GmmWeighting::two_step_robust}), RankDeficiencyError);
}

TEST(IvGmm, UnidentifiedInstrumentIsFlaggedOrRejected) {
  DgpConfig cfg;
  cfg.instrument_strength = 0.0;
  cfg.endogeneity_rho = 0.5;
  cfg.seed = 10;
  const auto s = generate_endogenous_panel(cfg);
  const auto spec = endogenous_model_spec(false);
  const auto p = design_matrix(prepare_model(s.panel, spec), spec);
  try {
    const auto g = iv_gmm(p, GmmSpec{{"x_endog"}, {"z1"}, GmmWeighting::two_step_robust});
    EXPECT_TRUE(g.flags.count("weak_instruments"));
  } catch (const NumericalError&) {
    SUCCEED();
  }
}
