#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "gravity/errors.hpp"

namespace gravity {

/// Output of the least-squares kernel shared by every estimator.
struct OlsFit {
  Eigen::VectorXd coefficients;
  Eigen::MatrixXd covariance;  // sigma2 * (X'X)^-1
  Eigen::MatrixXd xtx_inverse;
  Eigen::VectorXd residuals;
  double ssr = 0.0;
  double sigma2 = 0.0;
  long df_resid = 0;
};

/// Relative threshold on the pivoted-QR diagonal below which a column is
/// treated as linearly dependent.
inline constexpr double kRankTolerance = 1e-10;

/// Least squares through column-pivoted Householder QR.
///
/// Throws RankDeficiencyError naming the columns the pivoting leaves beyond
/// the numerical rank; `names` (optional) supplies the column names.
inline OlsFit ols_solve(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                        std::span<const std::string> names = {}) {
  const Eigen::Index n = X.rows();
  const Eigen::Index k = X.cols();
  if (y.size() != n) throw ConfigError("ols_solve: X and y row counts differ");
  if (k == 0) throw ConfigError("ols_solve: design has no columns");
  if (n <= k) {
    throw NumericalError("ols_solve: need more rows (" + std::to_string(n) + ") than columns (" +
                         std::to_string(k) + ")");
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
  qr.setThreshold(kRankTolerance);
  if (qr.rank() < k) {
    std::vector<std::string> dependent;
    const auto& perm = qr.colsPermutation().indices();
    for (Eigen::Index j = qr.rank(); j < k; ++j) {
      const auto col = static_cast<std::size_t>(perm[j]);
      dependent.push_back(col < names.size() ? names[col] : "column " + std::to_string(col));
    }
    std::sort(dependent.begin(), dependent.end());
    std::string msg = "rank-deficient design; dependent column(s):";
    for (const auto& d : dependent) msg += " " + d;
    throw RankDeficiencyError(msg, std::move(dependent));
  }

  OlsFit fit;
  fit.coefficients = qr.solve(y);
  fit.residuals = y - X * fit.coefficients;
  fit.ssr = fit.residuals.squaredNorm();
  fit.df_resid = static_cast<long>(n - k);
  fit.sigma2 = fit.ssr / static_cast<double>(fit.df_resid);

  // (X'X)^-1 = P R^-1 R^-T P'
  const Eigen::MatrixXd R = qr.matrixR().topLeftCorner(k, k).template triangularView<Eigen::Upper>();
  const Eigen::MatrixXd r_inv = R.template triangularView<Eigen::Upper>().solve(
      Eigen::MatrixXd::Identity(k, k));
  const Eigen::MatrixXd permuted = r_inv * r_inv.transpose();
  const auto& perm = qr.colsPermutation();
  fit.xtx_inverse = perm * permuted * perm.transpose();
  fit.xtx_inverse = 0.5 * (fit.xtx_inverse + fit.xtx_inverse.transpose());
  fit.covariance = fit.sigma2 * fit.xtx_inverse;
  return fit;
}

/// Rank of X under the kernel's tolerance.
inline Eigen::Index numerical_rank(const Eigen::MatrixXd& X) {
  if (X.cols() == 0) return 0;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
  qr.setThreshold(kRankTolerance);
  return qr.rank();
}

/// Residual sum of squares of a possibly rank-deficient least-squares fit.
inline double lstsq_ssr(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, Eigen::Index* rank) {
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
  qr.setThreshold(kRankTolerance);
  if (rank) *rank = qr.rank();
  const Eigen::VectorXd beta = qr.solve(y);
  return (y - X * beta).squaredNorm();
}

}  // namespace gravity
