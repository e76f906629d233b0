#include <gtest/gtest.h>

#include "support.hpp"

using namespace gravity;

TEST(OlsSolve, ExactLine) {
  Eigen::MatrixXd X(5, 2);
  Eigen::VectorXd y(5);
  for (int i = 0; i < 5; ++i) {
    X(i, 0) = 1.0;
    X(i, 1) = i;
    y[i] = 2.0 * i + 1.0;
  }
  const auto fit = ols_solve(X, y);
  EXPECT_NEAR(fit.coefficients[0], 1.0, 1e-12);
  EXPECT_NEAR(fit.coefficients[1], 2.0, 1e-12);
  EXPECT_LE(fit.residuals.cwiseAbs().maxCoeff(), 1e-12);

  RegressionProblem p;
  p.X = X;
  p.y = y;
  p.columns = {{kInterceptName, "", Role::continuous, true, true}, {"x", "", Role::continuous, false, false}};
  for (int i = 0; i < 5; ++i) p.row_keys.push_back({EntityId{"PER", "CHN"}, TimeIndex{2000 + i}});
  EXPECT_NEAR(pooled_ols(p).r_squared, 1.0, 1e-12);
}

TEST(OlsSolve, DuplicatedColumnIsNamed) {
  auto rng = Rng::stream(1, "dup");
  Eigen::MatrixXd X(20, 3);
  Eigen::VectorXd y(20);
  for (int i = 0; i < 20; ++i) {
    X(i, 0) = 1.0;
    X(i, 1) = rng.normal();
    X(i, 2) = X(i, 1);
    y[i] = rng.normal();
  }
  const std::vector<std::string> names{"const", "x", "x_copy"};
  try {
    ols_solve(X, y, names);
    FAIL() << "rank deficiency not detected";
  } catch (const RankDeficiencyError& e) {
    ASSERT_EQ(e.columns().size(), 1u);
    EXPECT_TRUE(e.columns()[0] == "x" || e.columns()[0] == "x_copy");
    EXPECT_NE(std::string(e.what()).find(e.columns()[0]), std::string::npos);
  }
}

TEST(OlsSolve, MatchesNormalEquationsOracle) {
  auto rng = Rng::stream(2016, "oracle");
  Eigen::MatrixXd X(100, 4);
  Eigen::VectorXd y(100);
  for (int i = 0; i < 100; ++i) {
    X(i, 0) = 1.0;
    for (int j = 1; j < 4; ++j) X(i, j) = rng.normal() * j;
    y[i] = 0.5 - X(i, 1) + 0.25 * X(i, 2) + 2.0 * X(i, 3) + rng.normal();
  }
  const auto fit = ols_solve(X, y);
  const Eigen::VectorXd oracle = testkit::normal_equations(X, y);
  EXPECT_LE((fit.coefficients - oracle).cwiseAbs().maxCoeff(), 1e-8);

  const Eigen::VectorXd e = y - X * oracle;
  const double s2 = e.squaredNorm() / 96.0;
  const Eigen::MatrixXd cov = s2 * (X.transpose() * X).inverse();
  EXPECT_LE((fit.covariance - cov).cwiseAbs().maxCoeff(), 1e-10);

  // X'e = 0 relative to |X||y|
  EXPECT_LE((X.transpose() * fit.residuals).norm() / (X.norm() * y.norm()), 1e-8);
}

TEST(OlsSolve, RejectsShortAndMismatched) {
  EXPECT_THROW(ols_solve(Eigen::MatrixXd::Ones(2, 2), Eigen::VectorXd::Ones(2)), NumericalError);
  EXPECT_THROW(ols_solve(Eigen::MatrixXd::Ones(3, 1), Eigen::VectorXd::Ones(2)), ConfigError);
}

TEST(OlsSolve, CovarianceIsSymmetricPsd) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto p = testkit::random_problem(seed);
    const auto r = pooled_ols(p);
    EXPECT_EQ(r.covariance, r.covariance.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(r.covariance);
    EXPECT_GE(eig.eigenvalues().minCoeff(), -1e-10 * eig.eigenvalues().maxCoeff());
    for (Eigen::Index j = 0; j < r.std_errors.size(); ++j)
      EXPECT_DOUBLE_EQ(r.std_errors[j], std::sqrt(r.covariance(j, j)));
  }
}
