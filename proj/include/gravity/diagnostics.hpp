#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "gravity/distributions.hpp"
#include "gravity/errors.hpp"
#include "gravity/results.hpp"

namespace gravity {

/// Heteroskedasticity-robust sandwich (X'X)^-1 X' diag(e^2) X (X'X)^-1,
/// scaled by n/(n-k) when `small_sample` is set.
inline Eigen::MatrixXd robust_covariance(const Eigen::MatrixXd& X, const Eigen::VectorXd& residuals,
                                         bool small_sample) {
  const Eigen::Index n = X.rows();
  const Eigen::Index k = X.cols();
  if (residuals.size() != n) throw ConfigError("robust_covariance: dimension mismatch");
  if (small_sample && n <= k) throw NumericalError("robust_covariance: n must exceed k");

  const Eigen::MatrixXd xtx = X.transpose() * X;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(xtx);
  lu.setThreshold(1e-12);
  if (!lu.isInvertible()) throw NumericalError("robust_covariance: X'X is singular");
  const Eigen::MatrixXd bread = lu.inverse();

  const Eigen::MatrixXd weighted = X.array().colwise() * residuals.array();
  const Eigen::MatrixXd meat = weighted.transpose() * weighted;
  Eigen::MatrixXd v = bread * meat * bread;
  if (small_sample) v *= static_cast<double>(n) / static_cast<double>(n - k);
  return 0.5 * (v + v.transpose());
}

/// Aligned FE/RE coefficients on the columns both fits estimate and that vary within entities.
struct HausmanComparison {
  std::vector<std::string> names;
  Eigen::VectorXd b;       // consistent (fixed effects)
  Eigen::VectorXd B;       // efficient under H0 (random effects)
  Eigen::MatrixXd v_diff;  // V_b - V_B

  Eigen::VectorXd difference() const { return b - B; }

  /// sqrt(diag(V_b - V_B)); NaN where the diagonal is negative.
  Eigen::VectorXd se_difference() const {
    Eigen::VectorXd se(v_diff.rows());
    for (Eigen::Index j = 0; j < se.size(); ++j)
      se[j] = v_diff(j, j) >= 0.0 ? std::sqrt(v_diff(j, j))
                                  : std::numeric_limits<double>::quiet_NaN();
    return se;
  }
};

inline HausmanComparison hausman_comparison(const EstimationResult& fe, const EstimationResult& re) {
  HausmanComparison c;
  std::vector<std::size_t> fi, ri;
  for (std::size_t j = 0; j < fe.names.size(); ++j) {
    const auto& name = fe.names[j];
    if (name == fe.intercept_name || name == re.intercept_name) continue;
    if (fe.time_invariant.count(name) || re.time_invariant.count(name)) continue;
    if (auto r = re.index_of(name)) {
      c.names.push_back(name);
      fi.push_back(j);
      ri.push_back(*r);
    }
  }
  if (c.names.empty()) throw ConfigError("hausman: no common time-varying coefficients");

  const auto m = static_cast<Eigen::Index>(c.names.size());
  c.b.resize(m);
  c.B.resize(m);
  c.v_diff.resize(m, m);
  for (Eigen::Index a = 0; a < m; ++a) {
    c.b[a] = fe.coefficients[static_cast<Eigen::Index>(fi[a])];
    c.B[a] = re.coefficients[static_cast<Eigen::Index>(ri[a])];
    for (Eigen::Index b = 0; b < m; ++b) {
      c.v_diff(a, b) = fe.covariance(static_cast<Eigen::Index>(fi[a]), static_cast<Eigen::Index>(fi[b])) -
                       re.covariance(static_cast<Eigen::Index>(ri[a]), static_cast<Eigen::Index>(ri[b]));
    }
  }
  c.v_diff = 0.5 * (c.v_diff + c.v_diff.transpose());
  return c;
}

/// Singular values at or below this fraction of the largest are treated as zero.
inline constexpr double kPinvTolerance = 1e-12;

/// Hausman FE-vs-RE statistic (b-B)'(V_b-V_B)^+(b-B).
///
/// The generalised inverse comes from the symmetric eigendecomposition. The
/// degrees of freedom are the rank it uses (the nominal column count when
/// that rank is zero). A negative eigenvalue sets not_positive_definite; a
/// negative quadratic form is reported as 0 with clamped_negative.
inline TestResult hausman_test(const HausmanComparison& c) {
  TestResult t;
  t.name = "hausman";
  const Eigen::VectorXd d = c.difference();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(c.v_diff);
  if (eig.info() != Eigen::Success) throw NumericalError("hausman: eigendecomposition failed");
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  const double largest = lambda.cwiseAbs().maxCoeff();
  const double cutoff = kPinvTolerance * largest;

  int rank = 0;
  double stat = 0.0;
  if (largest > 0.0) {
    const Eigen::VectorXd proj = eig.eigenvectors().transpose() * d;
    for (Eigen::Index j = 0; j < lambda.size(); ++j) {
      if (std::abs(lambda[j]) <= cutoff) continue;
      ++rank;
      stat += proj[j] * proj[j] / lambda[j];
      if (lambda[j] < 0.0) t.flags.insert("not_positive_definite");
    }
  }
  if (stat < 0.0) {
    stat = 0.0;
    t.flags.insert("clamped_negative");
  }
  t.statistic = stat;
  t.df = rank > 0 ? rank : static_cast<int>(c.names.size());
  t.p_value = chi2_survival(stat, t.df);
  return t;
}

inline TestResult hausman_test(const EstimationResult& fe, const EstimationResult& re) {
  return hausman_test(hausman_comparison(fe, re));
}

}  // namespace gravity
