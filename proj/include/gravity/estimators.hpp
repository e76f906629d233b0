#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gravity/diagnostics.hpp"
#include "gravity/distributions.hpp"
#include "gravity/errors.hpp"
#include "gravity/model.hpp"
#include "gravity/ols.hpp"
#include "gravity/results.hpp"

namespace gravity {

namespace detail {

inline void describe_columns(EstimationResult& r, const std::vector<ColumnMeta>& cols) {
  r.names.clear();
  for (const auto& c : cols) {
    r.names.push_back(c.name);
    if (c.time_invariant || c.intercept) r.time_invariant.insert(c.name);
    if (c.intercept) r.intercept_name = c.name;
  }
}

}  // namespace detail

/// Pooled OLS on the problem as given.
inline EstimationResult pooled_ols(const RegressionProblem& p) {
  const auto names = p.column_names();
  const OlsFit fit = ols_solve(p.X, p.y, names);

  EstimationResult r;
  r.method = Method::pooled_ols;
  detail::describe_columns(r, p.columns);
  r.coefficients = fit.coefficients;
  set_covariance(r, fit.covariance);
  r.residuals = fit.residuals;
  r.n_obs = p.n_rows();
  r.df_resid = fit.df_resid;
  const double sst = (p.y.array() - p.y.mean()).matrix().squaredNorm();
  r.r_squared = sst > 0.0 ? std::clamp(1.0 - fit.ssr / sst, 0.0, 1.0) : 0.0;
  r.extras["sigma2"] = fit.sigma2;
  return r;
}

/// Within estimator.
///
/// Time-invariant regressors are absent from the result. When the problem
/// carries an intercept, a constant is recovered as mean(y) - mean(x)'b with
/// variance sigma2/n + mean(x)' V mean(x). Degrees of freedom are
/// n - k - N_entities. r_squared is corr^2(y, fitted) with fitted including
/// the recovered entity effects; extras hold the within and overall variants.
inline EstimationResult fixed_effects(const RegressionProblem& p) {
  const WithinTransform w = demean_within(p);
  const RegressionProblem& q = w.problem;
  const auto names = q.column_names();
  const OlsFit fit = ols_solve(q.X, q.y, names);

  const auto groups = group_rows(p.row_keys);
  const auto n = static_cast<long>(q.n_rows());
  const auto k = static_cast<long>(q.X.cols());
  const auto n_entities = static_cast<long>(groups.count());
  const long df = n - k - n_entities;
  if (df <= 0) throw NumericalError("fixed effects: no residual degrees of freedom");
  const double sigma2 = fit.ssr / static_cast<double>(df);
  const Eigen::MatrixXd v_slopes = sigma2 * fit.xtx_inverse;

  EstimationResult r;
  r.method = Method::fixed_effects;
  r.n_obs = p.n_rows();
  r.df_resid = df;
  r.residuals = fit.residuals;
  r.extras["sigma2"] = sigma2;
  r.extras["n_entities"] = static_cast<double>(n_entities);

  // Slopes in the original column order; the constant (if any) goes first.
  std::vector<std::size_t> slope_src;  // index into p.columns for each q column
  for (const auto& c : q.columns) slope_src.push_back(*p.column_index(c.name));

  const bool with_constant = p.has_intercept();
  const Eigen::Index offset = with_constant ? 1 : 0;
  r.coefficients.resize(k + offset);
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(k + offset, k + offset);
  r.coefficients.tail(k) = fit.coefficients;
  cov.bottomRightCorner(k, k) = v_slopes;

  Eigen::VectorXd xbar(k);
  for (Eigen::Index j = 0; j < k; ++j) xbar[j] = p.X.col(static_cast<Eigen::Index>(slope_src[j])).mean();
  const double ybar = p.y.mean();

  if (with_constant) {
    r.names.push_back(kInterceptName);
    r.intercept_name = kInterceptName;
    r.time_invariant.insert(kInterceptName);
    r.coefficients[0] = ybar - xbar.dot(fit.coefficients);
    const Eigen::VectorXd v_xbar = v_slopes * xbar;
    cov(0, 0) = sigma2 / static_cast<double>(n) + xbar.dot(v_xbar);
    cov.block(1, 0, k, 1) = -v_xbar;
    cov.block(0, 1, 1, k) = -v_xbar.transpose();
    r.extras["recovered_constant"] = 1.0;
  }
  for (const auto& c : q.columns) r.names.push_back(c.name);
  set_covariance(r, cov);

  // Fitted values with entity effects: y - within residual.
  const Eigen::VectorXd fitted_lsdv = p.y - fit.residuals;
  r.r_squared = squared_correlation(p.y, fitted_lsdv);
  Eigen::VectorXd xb = Eigen::VectorXd::Zero(p.y.size());
  for (Eigen::Index j = 0; j < k; ++j)
    xb += fit.coefficients[j] * p.X.col(static_cast<Eigen::Index>(slope_src[j]));
  r.extras["r2_overall"] = squared_correlation(p.y, xb);
  const double sst_within = q.y.squaredNorm();
  r.extras["r2_within"] = sst_within > 0.0 ? std::clamp(1.0 - fit.ssr / sst_within, 0.0, 1.0) : 0.0;
  r.extras["dropped_columns"] = static_cast<double>(w.dropped_columns.size());
  return r;
}

/// Feasible random-effects variance components.
struct VarianceComponents {
  double sigma2_idiosyncratic = 0.0;
  double sigma2_entity = 0.0;
  std::map<EntityId, double> lambda_per_entity;
  bool clamped = false;  // sigma2_entity estimate was negative and set to 0
};

inline double re_lambda(double sigma2_e, double sigma2_u, std::size_t t_i) {
  const double total = static_cast<double>(t_i) * sigma2_u + sigma2_e;
  if (!(total > 0.0)) return 0.0;
  return std::clamp(1.0 - std::sqrt(sigma2_e / total), 0.0, 1.0);
}

/// Swamy-Arora components for unbalanced panels.
///
/// sigma2_e comes from the within regression (df n - N - k_within); the
/// between regression of entity means on every column gives s2_b, and
/// sigma2_u = s2_b - sigma2_e / T_h with T_h the harmonic mean of T_i,
/// clamped at zero.
inline VarianceComponents swamy_arora(const RegressionProblem& p) {
  const auto groups = group_rows(p.row_keys);
  const auto n_entities = static_cast<Eigen::Index>(groups.count());
  if (n_entities < 2) throw NumericalError("random effects needs at least 2 entities");
  if (n_entities <= p.X.cols()) {
    throw NumericalError("random effects: between regression infeasible (" +
                         std::to_string(n_entities) + " entities, " + std::to_string(p.X.cols()) +
                         " columns)");
  }

  const WithinTransform w = demean_within(p);
  const OlsFit within = ols_solve(w.problem.X, w.problem.y, w.problem.column_names());
  const long df_within =
      static_cast<long>(p.n_rows()) - static_cast<long>(n_entities) - static_cast<long>(w.problem.X.cols());
  if (df_within <= 0) throw NumericalError("random effects: no within degrees of freedom");

  VarianceComponents vc;
  vc.sigma2_idiosyncratic = within.ssr / static_cast<double>(df_within);

  const Eigen::MatrixXd xbar = group_means(groups, p.X);
  const Eigen::VectorXd ybar = group_means(groups, Eigen::MatrixXd(p.y)).col(0);
  Eigen::Index rank = 0;
  const double ssr_between = lstsq_ssr(xbar, ybar, &rank);
  if (n_entities <= rank) throw NumericalError("random effects: between regression has no df");
  const double s2_between = ssr_between / static_cast<double>(n_entities - rank);

  double inv_sum = 0.0;
  for (auto s : groups.sizes) inv_sum += 1.0 / static_cast<double>(s);
  const double t_harmonic = static_cast<double>(n_entities) / inv_sum;

  const double sigma2_u = s2_between - vc.sigma2_idiosyncratic / t_harmonic;
  vc.clamped = sigma2_u < 0.0;
  vc.sigma2_entity = vc.clamped ? 0.0 : sigma2_u;

  for (std::size_t i = 0; i < groups.count(); ++i) {
    vc.lambda_per_entity[groups.ids[i]] =
        vc.sigma2_entity == 0.0 ? 0.0
                                : re_lambda(vc.sigma2_idiosyncratic, vc.sigma2_entity, groups.sizes[i]);
  }
  return vc;
}

/// Random-effects GLS with the given components (quasi-demean, then OLS).
inline EstimationResult random_effects(const RegressionProblem& p, const VarianceComponents& vc) {
  const RegressionProblem q = quasi_demean(p, vc.lambda_per_entity);
  const OlsFit fit = ols_solve(q.X, q.y, q.column_names());

  EstimationResult r;
  r.method = Method::random_effects;
  detail::describe_columns(r, p.columns);
  r.coefficients = fit.coefficients;
  set_covariance(r, fit.covariance);
  r.residuals = fit.residuals;
  r.n_obs = p.n_rows();
  r.df_resid = fit.df_resid;
  r.r_squared = squared_correlation(p.y, p.X * fit.coefficients);
  r.extras["sigma2_idiosyncratic"] = vc.sigma2_idiosyncratic;
  r.extras["sigma2_entity"] = vc.sigma2_entity;
  double mean_lambda = 0.0;
  for (const auto& [_, l] : vc.lambda_per_entity) mean_lambda += l;
  if (!vc.lambda_per_entity.empty()) mean_lambda /= static_cast<double>(vc.lambda_per_entity.size());
  r.extras["lambda_mean"] = mean_lambda;
  if (vc.clamped) r.flags.insert("clamped_negative");
  return r;
}

inline EstimationResult random_effects(const RegressionProblem& p) {
  return random_effects(p, swamy_arora(p));
}

// ---------------------------------------------------------------------------
// IV-GMM

enum class GmmWeighting { two_step_robust, homoskedastic };

struct GmmSpec {
  std::vector<std::string> endogenous;   // columns of X treated as endogenous
  std::vector<std::string> instruments;  // excluded instruments (names in Z, or in X)
  GmmWeighting weighting = GmmWeighting::two_step_robust;
};

/// First-stage F below this flags weak instruments.
inline constexpr double kWeakInstrumentF = 10.0;

/// Two-step IV-GMM.
///
/// Instruments are the exogenous columns of X followed by the excluded
/// instruments. Step 1 is 2SLS; step 2 weights by the inverse of
/// S = (1/n) sum e_i^2 z_i z_i' from the step-1 residuals (or sigma2 Z'Z/n when
/// homoskedastic). Robust covariance n (X'Z S^-1 Z'X)^-1 carries an n/(n-k)
/// factor. Hansen's J (0 when just identified) is stored in extras.
inline EstimationResult iv_gmm(const RegressionProblem& p, const GmmSpec& spec) {
  const Eigen::Index n = p.X.rows();
  const Eigen::Index k = p.X.cols();
  const auto names = p.column_names();

  std::set<std::string> endog(spec.endogenous.begin(), spec.endogenous.end());
  for (const auto& e : endog) {
    if (!p.column_index(e)) throw ConfigError("iv_gmm: endogenous column not in model: " + e);
  }

  std::vector<Eigen::VectorXd> zcols;
  std::vector<std::string> znames;
  for (Eigen::Index j = 0; j < k; ++j) {
    if (!endog.count(names[j])) {
      zcols.push_back(p.X.col(j));
      znames.push_back(names[j]);
    }
  }
  const auto n_exogenous = static_cast<Eigen::Index>(zcols.size());
  for (const auto& inst : spec.instruments) {
    auto it = std::find(p.instrument_names.begin(), p.instrument_names.end(), inst);
    if (it != p.instrument_names.end()) {
      zcols.push_back(p.Z.col(it - p.instrument_names.begin()));
    } else if (auto j = p.column_index(inst)) {
      zcols.push_back(p.X.col(static_cast<Eigen::Index>(*j)));
    } else {
      throw ConfigError("iv_gmm: unknown instrument: " + inst);
    }
    znames.push_back(inst);
  }
  const auto L = static_cast<Eigen::Index>(zcols.size());
  if (L < k) {
    throw ConfigError("iv_gmm: order condition violated (" + std::to_string(L) +
                      " instruments for " + std::to_string(k) + " regressors)");
  }
  if (n <= L) throw NumericalError("iv_gmm: more instruments than observations");
  Eigen::MatrixXd Z(n, L);
  for (Eigen::Index j = 0; j < L; ++j) Z.col(j) = zcols[static_cast<std::size_t>(j)];

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> zqr(Z);
  zqr.setThreshold(kRankTolerance);
  if (zqr.rank() < L) {
    std::vector<std::string> dep;
    for (Eigen::Index j = zqr.rank(); j < L; ++j)
      dep.push_back(znames[static_cast<std::size_t>(zqr.colsPermutation().indices()[j])]);
    std::sort(dep.begin(), dep.end());
    std::string msg = "iv_gmm: rank-deficient instrument matrix; dependent:";
    for (const auto& d : dep) msg += " " + d;
    throw RankDeficiencyError(msg, dep);
  }

  // Step 1: 2SLS as least squares of Q'y on Q'X with Q an orthonormal basis of Z.
  const Eigen::MatrixXd Q = zqr.householderQ() * Eigen::MatrixXd::Identity(n, L);
  const Eigen::MatrixXd qx = Q.transpose() * p.X;
  const Eigen::VectorXd qy = Q.transpose() * p.y;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> sqr(qx);
  sqr.setThreshold(kRankTolerance);
  if (sqr.rank() < k)
    throw RankDeficiencyError("iv_gmm: instruments do not identify the regressors", {});
  const Eigen::VectorXd beta1 = sqr.solve(qy);
  const Eigen::VectorXd e1 = p.y - p.X * beta1;

  const double nd = static_cast<double>(n);
  Eigen::MatrixXd S;
  if (spec.weighting == GmmWeighting::two_step_robust) {
    const Eigen::MatrixXd ze = Z.array().colwise() * e1.array();
    S = ze.transpose() * ze / nd;
  } else {
    S = (e1.squaredNorm() / nd) * (Z.transpose() * Z) / nd;
  }
  S = 0.5 * (S + S.transpose());
  Eigen::LDLT<Eigen::MatrixXd> s_ldlt(S);
  if (s_ldlt.info() != Eigen::Success || !(s_ldlt.vectorD().minCoeff() > 0.0))
    throw NumericalError("iv_gmm: moment covariance S is singular");

  const Eigen::MatrixXd zx = Z.transpose() * p.X;
  const Eigen::VectorXd zy = Z.transpose() * p.y;
  const Eigen::MatrixXd w_zx = s_ldlt.solve(zx);  // S^-1 Z'X
  Eigen::MatrixXd a = zx.transpose() * w_zx;       // X'Z S^-1 Z'X
  a = 0.5 * (a + a.transpose());
  Eigen::LDLT<Eigen::MatrixXd> a_ldlt(a);
  if (a_ldlt.info() != Eigen::Success) throw NumericalError("iv_gmm: step-2 system is singular");
  const Eigen::VectorXd beta2 = a_ldlt.solve(w_zx.transpose() * zy);
  const Eigen::VectorXd e2 = p.y - p.X * beta2;

  EstimationResult r;
  r.method = Method::iv_gmm;
  detail::describe_columns(r, p.columns);
  r.coefficients = beta2;
  r.residuals = e2;
  r.n_obs = p.n_rows();
  r.df_resid = static_cast<long>(n - k);
  const Eigen::MatrixXd a_inv = a_ldlt.solve(Eigen::MatrixXd::Identity(k, k));
  if (spec.weighting == GmmWeighting::two_step_robust) {
    set_covariance(r, nd * a_inv * (nd / static_cast<double>(n - k)));
  } else {
    // sigma2 (X' P_Z X)^-1 with sigma2 from the final residuals.
    const double sigma2 = e2.squaredNorm() / static_cast<double>(n - k);
    set_covariance(r, sigma2 * (qx.transpose() * qx).inverse());
  }
  r.r_squared = squared_correlation(p.y, p.X * beta2);

  // Hansen J = n g' S^-1 g with g = Z'e/n.
  double j_stat = 0.0;
  if (L > k) {
    const Eigen::VectorXd g = Z.transpose() * e2 / nd;
    j_stat = std::max(0.0, nd * g.dot(s_ldlt.solve(g)));
    r.extras["hansen_j"] = j_stat;
    r.extras["hansen_j_df"] = static_cast<double>(L - k);
    r.extras["hansen_j_p"] = chi2_survival(j_stat, static_cast<int>(L - k));
  } else {
    r.extras["hansen_j"] = 0.0;
    r.extras["hansen_j_df"] = 0.0;
    r.extras["hansen_j_p"] = 1.0;
  }
  r.extras["n_instruments"] = static_cast<double>(L);

  // First-stage F of the excluded instruments for each endogenous column.
  const Eigen::Index q_excl = L - n_exogenous;
  if (q_excl > 0 && n > L) {
    const Eigen::MatrixXd z_exog = Z.leftCols(n_exogenous);
    for (const auto& e : spec.endogenous) {
      const Eigen::VectorXd x = p.X.col(static_cast<Eigen::Index>(*p.column_index(e)));
      const double ssr_full = lstsq_ssr(Z, x, nullptr);
      const double ssr_restricted =
          n_exogenous > 0 ? lstsq_ssr(z_exog, x, nullptr) : x.squaredNorm();
      const double f = ssr_full > 0.0 ? ((ssr_restricted - ssr_full) / static_cast<double>(q_excl)) /
                                            (ssr_full / static_cast<double>(n - L))
                                      : std::numeric_limits<double>::infinity();
      r.extras["first_stage_f:" + e] = f;
      if (f < kWeakInstrumentF) r.flags.insert("weak_instruments");
    }
  }
  return r;
}

}  // namespace gravity
