#pragma once

#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "gravity/errors.hpp"

namespace gravity {

/// Upper tail P(X > x) of a chi-square variable with `df` degrees of freedom.
inline double chi2_survival(double x, int df) {
  if (df < 1) throw ConfigError("chi-square degrees of freedom must be >= 1");
  if (std::isnan(x) || x < 0.0) throw ConfigError("chi-square statistic must be >= 0");
  if (x == 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  return boost::math::gamma_q(0.5 * df, 0.5 * x);
}

inline double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

/// Standard normal quantile for p in (0, 1).
inline double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw ConfigError("normal quantile needs p in (0,1)");
  return -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * p);
}

/// Two-sided normal p-value of coef / se.
inline double two_sided_p(double coef, double se) {
  if (!(se > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  return std::erfc(std::abs(coef / se) / std::numbers::sqrt2);
}

/// "***" for p < .01, "**" for p < .05, "*" for p < .10, otherwise empty.
inline std::string significance_stars(double p_value) {
  if (!(p_value < 0.10)) return "";
  if (p_value < 0.01) return "***";
  if (p_value < 0.05) return "**";
  return "*";
}

inline std::string significance_stars(double coef, double se) {
  return significance_stars(two_sided_p(coef, se));
}

}  // namespace gravity
