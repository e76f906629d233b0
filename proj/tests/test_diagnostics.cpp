#include <gtest/gtest.h>

#include "support.hpp"

using namespace gravity;

namespace {

// Closed form of the chi-square survival function for even df.
double chi2_even_closed_form(double x, int df) {
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < df / 2; ++k) {
    term *= (x / 2.0) / k;
    sum += term;
  }
  return std::exp(-x / 2.0) * sum;
}

EstimationResult fake_result(Method m, std::vector<std::string> names, Eigen::VectorXd b, Eigen::MatrixXd v) {
  EstimationResult r;
  r.method = m;
  r.names = std::move(names);
  r.coefficients = std::move(b);
  set_covariance(r, std::move(v));
  return r;
}

}  // namespace

TEST(Chi2Survival, ClosedFormsForEvenDf) {
  for (int df = 2; df <= 20; df += 2)
    for (double x : {0.1, 0.5, 1.0, 2.7726, 5.0, 13.68, 30.0, 80.0})
      EXPECT_NEAR(chi2_survival(x, df), chi2_even_closed_form(x, df), 1e-10) << x << " " << df;
}

TEST(Chi2Survival, BoundaryAndErrors) {
  for (int k = 1; k <= 30; ++k) EXPECT_EQ(chi2_survival(0.0, k), 1.0);
  EXPECT_NEAR(chi2_survival(2.7726, 4), 0.5966, 1e-4);
  EXPECT_THROW(chi2_survival(-1.0, 3), ConfigError);
  EXPECT_THROW(chi2_survival(1.0, 0), ConfigError);
}

TEST(Chi2Survival, StrictlyDecreasingOnGrid) {
  for (int df = 1; df <= 10; ++df) {
    double prev = 2.0;
    for (int i = 0; i < 100; ++i) {
      const double p = chi2_survival(0.25 * i, df);
      EXPECT_LT(p, prev) << df << " " << i;
      prev = p;
    }
  }
}

TEST(RobustCovariance, ConstantMagnitudeResidualsGiveClassical) {
  auto rng = Rng::stream(5, "rc");
  Eigen::MatrixXd X(60, 3);
  Eigen::VectorXd e(60);
  for (int i = 0; i < 60; ++i) {
    X(i, 0) = 1.0;
    X(i, 1) = rng.normal();
    X(i, 2) = rng.uniform();
    e[i] = (i % 2 ? 0.7 : -0.7);
  }
  const Eigen::MatrixXd classical = 0.49 * (X.transpose() * X).inverse();
  EXPECT_LE((robust_covariance(X, e, false) - classical).cwiseAbs().maxCoeff(), 1e-8);
  EXPECT_EQ(robust_covariance(X, Eigen::VectorXd::Zero(60), false).cwiseAbs().maxCoeff(), 0.0);
}

TEST(RobustCovariance, MatchesSummationOracle) {
  auto rng = Rng::stream(6, "rc");
  const int n = 80, k = 4;
  Eigen::MatrixXd X(n, k);
  Eigen::VectorXd e(n);
  for (int i = 0; i < n; ++i) {
    X(i, 0) = 1.0;
    for (int j = 1; j < k; ++j) X(i, j) = rng.normal();
    e[i] = rng.normal() * (0.2 + std::abs(X(i, 1)));
  }
  Eigen::MatrixXd meat = Eigen::MatrixXd::Zero(k, k);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) meat(a, b) += e[i] * e[i] * X(i, a) * X(i, b);
  const Eigen::MatrixXd bread = (X.transpose() * X).inverse();
  const Eigen::MatrixXd oracle = bread * meat * bread * (double(n) / (n - k));
  const Eigen::MatrixXd v = robust_covariance(X, e, true);
  EXPECT_LE((v - oracle).cwiseAbs().maxCoeff(), 1e-10);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(v);
  EXPECT_GE(eig.eigenvalues().minCoeff(), -1e-10 * eig.eigenvalues().maxCoeff());
}

TEST(RobustCovariance, SingularDesign) {
  Eigen::MatrixXd X = Eigen::MatrixXd::Ones(10, 2);
  EXPECT_THROW(robust_covariance(X, Eigen::VectorXd::Ones(10), false), NumericalError);
}

TEST(Hausman, IdenticalResultsGiveZero) {
  const auto p = testkit::random_problem(4, 20, 3, 7);
  const auto fe = fixed_effects(p);
  const auto t = hausman_test(fe, fe);
  EXPECT_EQ(t.statistic, 0.0);
  EXPECT_EQ(t.p_value, 1.0);
}

TEST(Hausman, CommonTimeVaryingColumnsOnly) {
  const auto p = testkit::random_problem(4, 20, 3, 7);
  const auto c = hausman_comparison(fixed_effects(p), random_effects(p));
  EXPECT_EQ(c.names, (std::vector<std::string>{"x0", "x1"}));
}

TEST(Hausman, NoCommonColumnsIsError) {
  const auto fe = fake_result(Method::fixed_effects, {"a"}, Eigen::VectorXd::Ones(1), Eigen::MatrixXd::Identity(1, 1));
  const auto re = fake_result(Method::random_effects, {"b"}, Eigen::VectorXd::Ones(1), Eigen::MatrixXd::Identity(1, 1));
  EXPECT_THROW(hausman_test(fe, re), Error);
}

TEST(Hausman, PseudoInverseEqualsInverseWhenPd) {
  Eigen::Matrix3d vb, vB;
  vb << 4, 1, 0.5, 1, 3, 0.2, 0.5, 0.2, 2;
  vB << 1, 0.2, 0.1, 0.2, 1, 0.1, 0.1, 0.1, 0.5;
  const Eigen::Vector3d b(1.0, -0.5, 0.25), B(0.2, 0.3, -0.1);
  const auto fe = fake_result(Method::fixed_effects, {"a", "b", "c"}, b, vb);
  const auto re = fake_result(Method::random_effects, {"a", "b", "c"}, B, vB);
  const auto t = hausman_test(fe, re);
  const Eigen::Vector3d d = b - B;
  const double oracle = d.dot((vb - vB).inverse() * d);
  EXPECT_NEAR(t.statistic, oracle, 1e-8);
  EXPECT_EQ(t.df, 3);
  EXPECT_TRUE(t.flags.empty());
}

TEST(Hausman, InvariantToColumnOrder) {
  Eigen::Matrix3d vb, vB;
  vb << 4, 1, 0.5, 1, 3, 0.2, 0.5, 0.2, 2;
  vB << 1, 0.2, 0.1, 0.2, 1, 0.1, 0.1, 0.1, 0.5;
  const Eigen::Vector3d b(1.0, -0.5, 0.25), B(0.2, 0.3, -0.1);
  Eigen::PermutationMatrix<3> perm;
  perm.indices() << 2, 0, 1;
  const auto t1 = hausman_test(fake_result(Method::fixed_effects, {"a", "b", "c"}, b, vb),
                               fake_result(Method::random_effects, {"a", "b", "c"}, B, vB));
  const auto t2 = hausman_test(
      fake_result(Method::fixed_effects, {"c", "a", "b"}, perm.transpose() * b, perm.transpose() * vb * perm),
      fake_result(Method::random_effects, {"a", "b", "c"}, B, vB));
  EXPECT_NEAR(t1.statistic, t2.statistic, 1e-10);
}

TEST(Hausman, NotPositiveDefiniteFlagged) {
  Eigen::Matrix2d vb, vB;
  vb << 1.0, 0.0, 0.0, 0.5;
  vB << 0.5, 0.0, 0.0, 1.0;  // V_b - V_B = diag(0.5, -0.5)
  const auto t = hausman_test(fake_result(Method::fixed_effects, {"a", "b"}, Eigen::Vector2d(1.0, 0.0), vb),
                              fake_result(Method::random_effects, {"a", "b"}, Eigen::Vector2d(0.0, 0.0), vB));
  EXPECT_TRUE(t.flags.count("not_positive_definite"));
  EXPECT_NEAR(t.statistic, 2.0, 1e-12);

  const auto neg = hausman_test(fake_result(Method::fixed_effects, {"a", "b"}, Eigen::Vector2d(0.0, 1.0), vb),
                                fake_result(Method::random_effects, {"a", "b"}, Eigen::Vector2d(0.0, 0.0), vB));
  EXPECT_EQ(neg.statistic, 0.0);
  EXPECT_TRUE(neg.flags.count("clamped_negative"));
  EXPECT_EQ(neg.p_value, 1.0);
}

TEST(Hausman, RankDeficientDifferenceUsesRank) {
  Eigen::Matrix2d vb, vB;
  vb << 2.0, 1.0, 1.0, 2.0;
  vB << 1.0, 0.0, 0.0, 1.0;  // difference [[1,1],[1,1]] has rank 1
  const auto t = hausman_test(fake_result(Method::fixed_effects, {"a", "b"}, Eigen::Vector2d(1.0, 1.0), vb),
                              fake_result(Method::random_effects, {"a", "b"}, Eigen::Vector2d(0.0, 0.0), vB));
  EXPECT_EQ(t.df, 1);
  EXPECT_NEAR(t.statistic, 1.0, 1e-10);
}

TEST(Stars, PartitionMatchesTwoSidedNormal) {
  for (int i = -400; i <= 400; ++i) {
    const double z = i / 100.0;
    const double p = two_sided_p(z, 1.0);
    const auto s = significance_stars(z, 1.0);
    const std::string expect = p < 0.01 ? "***" : p < 0.05 ? "**" : p < 0.10 ? "*" : "";
    EXPECT_EQ(s, expect) << z;
  }
  EXPECT_EQ(significance_stars(1.0, 2.0), "");
}
