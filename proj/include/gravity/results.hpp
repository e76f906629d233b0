#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gravity/errors.hpp"

namespace gravity {

enum class Method { pooled_ols, fixed_effects, random_effects, iv_gmm };

inline std::string to_string(Method m) {
  switch (m) {
    case Method::pooled_ols: return "pooled_ols";
    case Method::fixed_effects: return "fixed_effects";
    case Method::random_effects: return "random_effects";
    case Method::iv_gmm: return "iv_gmm";
  }
  return "?";
}

inline Method parse_method(const std::string& s) {
  if (s == "pooled_ols") return Method::pooled_ols;
  if (s == "fixed_effects") return Method::fixed_effects;
  if (s == "random_effects") return Method::random_effects;
  if (s == "iv_gmm") return Method::iv_gmm;
  throw ConfigError("unknown estimation method: " + s);
}

/// Column heading used in coefficient tables.
inline std::string display_name(Method m) {
  switch (m) {
    case Method::pooled_ols: return "Pooled OLS";
    case Method::fixed_effects: return "Fixed effects";
    case Method::random_effects: return "Random effects";
    case Method::iv_gmm: return "GMM";
  }
  return "?";
}

struct EstimationResult {
  Method method = Method::pooled_ols;
  std::vector<std::string> names;
  Eigen::VectorXd coefficients;
  Eigen::VectorXd std_errors;
  Eigen::MatrixXd covariance;
  Eigen::VectorXd residuals;
  std::size_t n_obs = 0;
  long df_resid = 0;
  double r_squared = 0.0;
  std::map<std::string, double> extras;
  std::set<std::string> flags;
  std::set<std::string> time_invariant;  // includes the intercept
  std::string intercept_name;            // empty when the fit has no intercept

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t j = 0; j < names.size(); ++j)
      if (names[j] == name) return j;
    return std::nullopt;
  }
  bool has(const std::string& name) const { return index_of(name).has_value(); }

  double coefficient(const std::string& name) const { return coefficients[at(name)]; }
  double std_error(const std::string& name) const { return std_errors[at(name)]; }

 private:
  Eigen::Index at(const std::string& name) const {
    auto j = index_of(name);
    if (!j) throw ConfigError("no coefficient named " + name + " in " + to_string(method));
    return static_cast<Eigen::Index>(*j);
  }
};

struct TestResult {
  std::string name;
  double statistic = 0.0;
  int df = 1;
  double p_value = 1.0;
  std::set<std::string> flags;  // not_positive_definite, clamped_negative

  bool rejects(double alpha) const { return p_value < alpha; }
};

/// Finishes a result from its covariance: symmetrises it and derives SEs.
inline void set_covariance(EstimationResult& r, Eigen::MatrixXd cov) {
  r.covariance = 0.5 * (cov + cov.transpose());
  r.std_errors.resize(r.covariance.rows());
  for (Eigen::Index j = 0; j < r.covariance.rows(); ++j)
    r.std_errors[j] = std::sqrt(std::max(0.0, r.covariance(j, j)));
}

/// Squared correlation between two vectors (0 when either is constant).
inline double squared_correlation(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  const Eigen::VectorXd ca = a.array() - a.mean();
  const Eigen::VectorXd cb = b.array() - b.mean();
  const double den = ca.squaredNorm() * cb.squaredNorm();
  if (!(den > 0.0)) return 0.0;
  const double num = ca.dot(cb);
  return std::min(1.0, num * num / den);
}

}  // namespace gravity
