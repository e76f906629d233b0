#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "gravity/detail/adf_tables.hpp"
#include "gravity/distributions.hpp"
#include "gravity/errors.hpp"
#include "gravity/ols.hpp"
#include "gravity/panel.hpp"

namespace gravity {

enum class Deterministics { constant, constant_trend };

inline std::string to_string(Deterministics d) {
  return d == Deterministics::constant ? "constant" : "constant_trend";
}

inline Deterministics parse_deterministics(const std::string& s) {
  if (s == "constant" || s == "c") return Deterministics::constant;
  if (s == "constant_trend" || s == "ct" || s == "trend") return Deterministics::constant_trend;
  throw ConfigError("unknown deterministics: " + s);
}

struct AdfResult {
  double t_stat = 0.0;
  int lags_used = 0;
  int n_effective = 0;
  int series_length = 0;
  Deterministics deterministics = Deterministics::constant;
  double p_value = std::numeric_limits<double>::quiet_NaN();
  bool p_clamped = false;
};

/// Minimum levels length accepted for `lags`: lags + 4 differenced points and
/// at least one residual degree of freedom.
inline int adf_min_length(int lags, Deterministics det) {
  const int k = lags + 2 + (det == Deterministics::constant_trend ? 1 : 0);
  return std::max(lags + 5, lags + 1 + k + 1);
}

/// ADF regression dy_t = a (+ d t) + rho y_{t-1} + sum_j phi_j dy_{t-j} + e_t.
/// Returns t = rho_hat / se(rho_hat); the p-value is left unset.
inline AdfResult adf_regression(std::span<const double> series, int lags, Deterministics det) {
  if (lags < 0) throw ConfigError("ADF lags must be >= 0");
  const int T = static_cast<int>(series.size());
  if (T < adf_min_length(lags, det)) {
    throw DataError("series too short for ADF with " + std::to_string(lags) + " lag(s): length " +
                    std::to_string(T));
  }
  for (double v : series)
    if (!std::isfinite(v)) throw DataError("ADF series contains a non-finite value");

  const bool trend = det == Deterministics::constant_trend;
  const int n = T - 1 - lags;
  const int k = 2 + lags + (trend ? 1 : 0);
  Eigen::MatrixXd X(n, k);
  Eigen::VectorXd dy(n);
  double scale = 0.0;
  for (int r = 0; r < n; ++r) {
    const int t = r + lags + 1;  // index of y_t
    dy[r] = series[t] - series[t - 1];
    scale += dy[r] * dy[r];
    int c = 0;
    X(r, c++) = 1.0;
    if (trend) X(r, c++) = static_cast<double>(r + 1);
    X(r, c++) = series[t - 1];
    for (int j = 1; j <= lags; ++j) X(r, c++) = series[t - j] - series[t - j - 1];
  }

  OlsFit fit;
  try {
    fit = ols_solve(X, dy);
  } catch (const RankDeficiencyError&) {
    throw NumericalError("degenerate series: ADF design is rank deficient");
  }
  if (fit.ssr <= 1e-20 * std::max(scale, std::numeric_limits<double>::min()))
    throw NumericalError("degenerate series: ADF regression fits exactly");

  const int rho = trend ? 2 : 1;
  AdfResult out;
  out.t_stat = fit.coefficients[rho] / std::sqrt(fit.covariance(rho, rho));
  out.lags_used = lags;
  out.n_effective = n;
  out.series_length = T;
  out.deterministics = det;
  return out;
}

// ---------------------------------------------------------------------------
// Tabulated Dickey-Fuller distribution

struct AdfPValue {
  double value = 1.0;
  bool clamped = false;       // hit [1e-6, 1 - 1e-6]
  bool extrapolated = false;  // t outside the tabulated quantile range
};

inline constexpr double kMinPValue = 1e-6;
inline constexpr double kMaxPValue = 1.0 - 1e-6;

namespace detail {

namespace tab = adf_tables;

/// Table cells for (det, lags) sorted by length; lags beyond the table are clamped.
inline std::vector<const tab::Cell*> table_cells(Deterministics det, int lags) {
  const int d = det == Deterministics::constant ? 0 : 1;
  int max_lags = -1;
  for (const auto& c : tab::kCells)
    if (c.deterministics == d) max_lags = std::max(max_lags, c.lags);
  if (max_lags < 0) throw ConfigError("no Dickey-Fuller table for " + to_string(det));
  const int use = std::min(lags, max_lags);
  std::vector<const tab::Cell*> out;
  for (const auto& c : tab::kCells)
    if (c.deterministics == d && c.lags == use) out.push_back(&c);
  std::sort(out.begin(), out.end(), [](auto* a, auto* b) { return a->length < b->length; });
  if (out.empty()) throw ConfigError("no Dickey-Fuller table rows for the requested lags");
  return out;
}

struct Bracket {
  const tab::Cell* lo;
  const tab::Cell* hi;
  double weight_lo;  // interpolation weight in 1/T
};

inline Bracket bracket(const std::vector<const tab::Cell*>& cells, int length) {
  if (length <= cells.front()->length) return {cells.front(), cells.front(), 1.0};
  if (length >= cells.back()->length) return {cells.back(), cells.back(), 1.0};
  for (std::size_t i = 1; i < cells.size(); ++i) {
    if (cells[i]->length >= length) {
      const double a = 1.0 / cells[i - 1]->length;
      const double b = 1.0 / cells[i]->length;
      return {cells[i - 1], cells[i], (1.0 / length - b) / (a - b)};
    }
  }
  return {cells.back(), cells.back(), 1.0};
}

/// Normal score of P(T <= t) at one table node: piecewise linear in the
/// quantiles, extended linearly beyond them.
inline double node_score(const tab::Cell& c, double t, bool& extrapolated) {
  const auto& q = c.quantiles;
  const auto& p = tab::kProbabilities;
  const std::size_t m = q.size();
  auto z = [&](std::size_t i) { return normal_quantile(p[i]); };
  auto segment = [&](std::size_t i) {
    const double dq = q[i + 1] - q[i];
    const double slope = dq > 0.0 ? (z(i + 1) - z(i)) / dq : 0.0;
    return z(i) + slope * (t - q[i]);
  };
  if (t < q.front()) {
    extrapolated = true;
    return segment(0);
  }
  if (t > q.back()) {
    extrapolated = true;
    return segment(m - 2);
  }
  const auto it = std::upper_bound(q.begin(), q.end(), t);
  const std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(it - q.begin()), m - 1) - 1;
  return segment(i);
}

}  // namespace detail

/// P-value of an ADF t statistic from the tabulated Dickey-Fuller distribution,
/// interpolated in t (normal-score scale) and in 1/T.
inline AdfPValue adf_p_value(double t_stat, Deterministics det, int n_effective, int lags = 0) {
  if (!std::isfinite(t_stat)) throw ConfigError("ADF p-value needs a finite statistic");
  const auto cells = detail::table_cells(det, lags);
  const int length = n_effective + std::max(lags, 0) + 1;
  const auto br = detail::bracket(cells, length);

  AdfPValue out;
  const double z_lo = detail::node_score(*br.lo, t_stat, out.extrapolated);
  const double z_hi = br.hi == br.lo ? z_lo : detail::node_score(*br.hi, t_stat, out.extrapolated);
  const double z = br.weight_lo * z_lo + (1.0 - br.weight_lo) * z_hi;
  const double p = normal_cdf(z);
  out.value = std::clamp(p, kMinPValue, kMaxPValue);
  out.clamped = !(p > kMinPValue && p < kMaxPValue);
  return out;
}

/// ADF regression plus its tabulated p-value.
inline AdfResult adf_test(std::span<const double> series, int lags, Deterministics det) {
  AdfResult r = adf_regression(series, lags, det);
  const auto p = adf_p_value(r.t_stat, det, r.n_effective, lags);
  r.p_value = p.value;
  r.p_clamped = p.clamped;
  return r;
}

struct DfMoments {
  double mean = 0.0;
  double variance = 0.0;
};

/// Tabulated mean and variance of the ADF t statistic under a unit root.
inline DfMoments ips_moments(Deterministics det, int lags, int series_length) {
  const auto cells = detail::table_cells(det, lags);
  const auto br = detail::bracket(cells, series_length);
  const double w = br.weight_lo;
  return {w * br.lo->mean + (1.0 - w) * br.hi->mean,
          w * br.lo->variance + (1.0 - w) * br.hi->variance};
}

// ---------------------------------------------------------------------------
// Panel tests

struct IpsResult {
  double t_bar = 0.0;
  double w_stat = 0.0;
  int n_series = 0;
  double p_value = 1.0;
  std::vector<AdfResult> per_series;
  std::vector<EntityId> entities;
  std::vector<std::string> warnings;
};

struct FisherResult {
  double statistic = 0.0;
  int df = 0;
  double p_value = 1.0;
  std::vector<AdfResult> per_series;
  std::vector<EntityId> entities;
  std::vector<std::string> warnings;
};

/// IPS W statistic from per-series ADF results:
/// sqrt(N) (t_bar - mean E_i) / sqrt(mean Var_i), lower-tail normal p-value.
/// Sums run over sorted values so the result does not depend on entity order.
inline IpsResult ips_combine(std::span<const AdfResult> series) {
  if (series.size() < 2) throw DataError("IPS test needs at least 2 usable series");
  std::vector<double> t, e, v;
  for (const auto& s : series) {
    const auto m = ips_moments(s.deterministics, s.lags_used, s.series_length);
    t.push_back(s.t_stat);
    e.push_back(m.mean);
    v.push_back(m.variance);
  }
  auto sorted_mean = [](std::vector<double> x) {
    std::sort(x.begin(), x.end());
    double sum = 0.0;
    for (double a : x) sum += a;
    return sum / static_cast<double>(x.size());
  };
  IpsResult r;
  r.n_series = static_cast<int>(series.size());
  r.t_bar = sorted_mean(t);
  const double mean_e = sorted_mean(e);
  const double mean_v = sorted_mean(v);
  r.w_stat = std::sqrt(static_cast<double>(r.n_series)) * (r.t_bar - mean_e) / std::sqrt(mean_v);
  r.p_value = normal_cdf(r.w_stat);
  r.per_series.assign(series.begin(), series.end());
  return r;
}

/// -2 ln p in 2^-32 fixed point: sums are exact, so the statistic is additive
/// over disjoint entity sets and independent of order.
inline std::int64_t fisher_term_fixed(double p) {
  if (!(p > 0.0 && p <= 1.0)) throw ConfigError("Fisher combination needs p in (0,1]");
  return std::llround(-2.0 * std::log(p) * 0x1.0p32);
}

inline FisherResult fisher_combine(std::span<const double> p_values) {
  if (p_values.size() < 2) throw DataError("Fisher test needs at least 2 usable series");
  std::int64_t acc = 0;
  for (double p : p_values) acc += fisher_term_fixed(p);
  FisherResult r;
  r.statistic = static_cast<double>(acc) * 0x1.0p-32;
  r.df = 2 * static_cast<int>(p_values.size());
  r.p_value = chi2_survival(r.statistic, r.df);
  return r;
}

struct PanelAdfRuns {
  std::vector<AdfResult> results;
  std::vector<EntityId> entities;
  std::vector<std::string> warnings;
};

/// Per-entity ADF tests on `variable`. Leading and trailing gaps are trimmed;
/// entities with interior gaps, too few points or degenerate fits are
/// excluded with a warning.
inline PanelAdfRuns panel_adf(const PanelDataset& panel, const std::string& variable, int lags,
                              Deterministics det) {
  const auto& v = panel.variable(variable);
  PanelAdfRuns out;
  for (std::size_t e = 0; e < panel.n_entities(); ++e) {
    const auto& id = panel.entities()[e];
    std::vector<double> series;
    bool gap = false;
    bool ended = false;
    for (std::size_t t = 0; t < panel.n_times(); ++t) {
      const auto c = panel.cell(e, t);
      if (v.state[c] == CellState::present) {
        if (ended) gap = true;
        series.push_back(v.values[c]);
      } else if (!series.empty()) {
        ended = true;
      }
    }
    if (gap) {
      out.warnings.push_back("interior_gap " + id.str() + " " + variable);
      continue;
    }
    if (static_cast<int>(series.size()) < adf_min_length(lags, det)) {
      out.warnings.push_back("too_short " + id.str() + " " + variable + " length=" +
                             std::to_string(series.size()));
      continue;
    }
    try {
      out.results.push_back(adf_test(series, lags, det));
      out.entities.push_back(id);
    } catch (const NumericalError&) {
      out.warnings.push_back("degenerate " + id.str() + " " + variable);
    }
  }
  return out;
}

inline IpsResult ips_test(const PanelDataset& panel, const std::string& variable, int lags,
                          Deterministics det) {
  auto runs = panel_adf(panel, variable, lags, det);
  if (runs.results.size() < 2)
    throw DataError("IPS test on " + variable + ": fewer than 2 usable entities");
  IpsResult r = ips_combine(runs.results);
  r.entities = std::move(runs.entities);
  r.warnings = std::move(runs.warnings);
  return r;
}

inline FisherResult fisher_adf_test(const PanelDataset& panel, const std::string& variable, int lags,
                                    Deterministics det) {
  auto runs = panel_adf(panel, variable, lags, det);
  if (runs.results.size() < 2)
    throw DataError("Fisher-ADF test on " + variable + ": fewer than 2 usable entities");
  std::vector<double> p;
  for (const auto& r : runs.results) p.push_back(r.p_value);
  FisherResult out = fisher_combine(p);
  out.per_series = std::move(runs.results);
  out.entities = std::move(runs.entities);
  out.warnings = std::move(runs.warnings);
  return out;
}

}  // namespace gravity
