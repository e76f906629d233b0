#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gravity/csv.hpp"
#include "gravity/diagnostics.hpp"
#include "gravity/distributions.hpp"
#include "gravity/errors.hpp"
#include "gravity/results.hpp"
#include "gravity/unitroot.hpp"

namespace gravity {

enum class TableFormat { text, markdown, csv };

/// Fixed-point rendering rounded half away from zero.
///
/// Rounding works on the shortest decimal form of `x`, so 2.0025 prints as
/// 2.003 at three decimals. Negative zero is never printed.
inline std::string format_fixed(double x, int decimals) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (decimals < 0) throw ConfigError("format_fixed: negative precision");
  char buf[512];
  auto res = std::to_chars(buf, buf + sizeof buf, std::abs(x), std::chars_format::fixed);
  std::string s(buf, res.ptr);
  const bool negative = std::signbit(x);

  auto dot = s.find('.');
  if (dot == std::string::npos) {
    s += '.';
    dot = s.size() - 1;
  }
  s.append(static_cast<std::size_t>(decimals) + 1, '0');
  const bool round_up = s[dot + static_cast<std::size_t>(decimals) + 1] >= '5';
  s.resize(dot + static_cast<std::size_t>(decimals) + 1);
  if (decimals == 0) s.pop_back();

  if (round_up) {
    int i = static_cast<int>(s.size()) - 1;
    for (; i >= 0; --i) {
      if (s[static_cast<std::size_t>(i)] == '.') continue;
      if (s[static_cast<std::size_t>(i)] == '9') {
        s[static_cast<std::size_t>(i)] = '0';
      } else {
        ++s[static_cast<std::size_t>(i)];
        break;
      }
    }
    if (i < 0) s.insert(s.begin(), '1');
  }
  const bool zero = s.find_first_not_of("0.") == std::string::npos;
  return negative && !zero ? "-" + s : s;
}

/// Up to `digits` significant digits, trailing zeros dropped (printf %g).
inline std::string format_general(double x, int digits = 7) {
  if (std::isnan(x)) return ".";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x == 0.0 ? 0.0 : x);
  return buf;
}

namespace detail {

inline std::string markdown_row(const std::vector<std::string>& cells) {
  std::string out = "|";
  for (const auto& c : cells) {
    std::string esc;
    for (char ch : c) {
      if (ch == '|') esc += '\\';
      esc += ch;
    }
    out += " " + esc + " |";
  }
  return out + "\n";
}

inline std::string markdown_rule(std::size_t n) {
  std::string out = "|";
  for (std::size_t i = 0; i < n; ++i) out += " --- |";
  return out + "\n";
}

inline std::string tab_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "\t" : "") + cells[i];
  return out + "\n";
}

inline std::string csv_number(double x) {
  if (std::isnan(x)) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Coefficient tables

struct CoefficientTableOptions {
  std::map<std::string, std::string> labels;  // column name -> row label
  std::optional<TestResult> hausman;          // appended as a final row
  TableFormat format = TableFormat::text;
};

/// `coef (se)` at three decimals.
inline std::string coefficient_cell(double coef, double se) {
  return format_fixed(coef, 3) + " (" + format_fixed(se, 3) + ")";
}

/// One column block per result. Rows follow `order`; the intercept, when any
/// result has one, comes last as "Constant", followed by R-squared, the
/// observation count and the optional Hausman row.
inline std::string render_coefficient_table(const std::vector<EstimationResult>& results,
                                            const std::vector<std::string>& order,
                                            const CoefficientTableOptions& opt = {}) {
  if (results.empty()) throw ConfigError("render_coefficient_table: no results");
  std::vector<std::string> rows;
  std::string intercept;
  for (const auto& r : results)
    if (!r.intercept_name.empty()) intercept = r.intercept_name;
  for (const auto& name : order)
    if (name != intercept) rows.push_back(name);

  auto label = [&](const std::string& name) {
    auto it = opt.labels.find(name);
    return it == opt.labels.end() ? name : it->second;
  };
  auto lookup = [](const EstimationResult& r, const std::string& name) -> std::optional<std::pair<double, double>> {
    auto j = r.index_of(name);
    if (!j) return std::nullopt;
    return std::make_pair(r.coefficients[static_cast<Eigen::Index>(*j)],
                          r.std_errors[static_cast<Eigen::Index>(*j)]);
  };
  auto percent = [](double r2) { return format_fixed(100.0 * r2, 2) + "%"; };

  std::ostringstream out;
  if (opt.format == TableFormat::csv) {
    std::vector<std::string> header{"variable", "label"};
    for (const auto& r : results) {
      const auto m = to_string(r.method);
      header.insert(header.end(), {m + "_coef", m + "_se", m + "_stars"});
    }
    write_csv_row(out, header);
    auto emit = [&](const std::string& name, const std::string& lab) {
      std::vector<std::string> cells{name, lab};
      for (const auto& r : results) {
        if (auto v = lookup(r, name)) {
          cells.insert(cells.end(), {detail::csv_number(v->first), detail::csv_number(v->second),
                                     significance_stars(v->first, v->second)});
        } else {
          cells.insert(cells.end(), {"", "", ""});
        }
      }
      write_csv_row(out, cells);
    };
    for (const auto& name : rows) emit(name, label(name));
    if (!intercept.empty()) emit(intercept, "Constant");
    std::vector<std::string> r2{"r_squared", "R-squared"}, n{"n_obs", "Number of observations"};
    for (const auto& r : results) {
      r2.insert(r2.end(), {detail::csv_number(r.r_squared), "", ""});
      n.insert(n.end(), {std::to_string(r.n_obs), "", ""});
    }
    write_csv_row(out, r2);
    write_csv_row(out, n);
    if (opt.hausman) {
      std::vector<std::string> h{"hausman", "Hausman test", detail::csv_number(opt.hausman->statistic),
                                 detail::csv_number(opt.hausman->p_value),
                                 significance_stars(opt.hausman->p_value)};
      h.resize(2 + 3 * results.size());
      write_csv_row(out, h);
    }
    return out.str();
  }

  const bool md = opt.format == TableFormat::markdown;
  std::vector<std::string> header{"Variables"};
  for (const auto& r : results) {
    header.push_back(display_name(r.method));
    if (!md) header.push_back("");
  }
  auto row_out = [&](const std::vector<std::string>& cells) {
    out << (md ? detail::markdown_row(cells) : detail::tab_row(cells));
  };
  row_out(header);
  if (md) out << detail::markdown_rule(header.size());

  auto coef_row = [&](const std::string& name, const std::string& lab) {
    std::vector<std::string> cells{lab};
    for (const auto& r : results) {
      auto v = lookup(r, name);
      const std::string cell = v ? coefficient_cell(v->first, v->second) : "";
      const std::string stars = v ? significance_stars(v->first, v->second) : "";
      if (md) {
        cells.push_back(stars.empty() ? cell : cell + " " + stars);
      } else {
        cells.push_back(cell);
        cells.push_back(stars);
      }
    }
    row_out(cells);
  };
  for (const auto& name : rows) coef_row(name, label(name));
  if (!intercept.empty()) coef_row(intercept, "Constant");

  std::vector<std::string> r2{"R-squared"}, n{"Number of observations"};
  for (const auto& r : results) {
    r2.push_back(percent(r.r_squared));
    n.push_back(std::to_string(r.n_obs));
    if (!md) {
      r2.push_back("");
      n.push_back("");
    }
  }
  row_out(r2);
  row_out(n);
  if (opt.hausman) {
    const auto stat = format_fixed(opt.hausman->statistic, 2);
    const auto stars = significance_stars(opt.hausman->p_value);
    std::vector<std::string> h{"Hausman test"};
    if (md) {
      h.push_back(stars.empty() ? stat : stat + " " + stars);
      h.resize(header.size());
    } else {
      h.insert(h.end(), {stat, stars});
      h.resize(header.size());
    }
    row_out(h);
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Unit-root tables

struct UnitRootRow {
  std::string label;
  std::optional<IpsResult> ips;
  std::optional<FisherResult> fisher;
};

/// `stat(p)` with four decimals on both.
inline std::string unitroot_cell(double stat, double p) {
  return format_fixed(stat, 4) + "(" + format_fixed(p, 4) + ")";
}

inline std::string render_unitroot_table(const std::vector<UnitRootRow>& rows,
                                         TableFormat format = TableFormat::text) {
  if (rows.empty()) throw ConfigError("render_unitroot_table: no variables");
  std::ostringstream out;
  if (format == TableFormat::csv) {
    write_csv_row(out, {"variable", "ips_w", "ips_p", "ips_n", "fisher_stat", "fisher_df", "fisher_p"});
    for (const auto& r : rows) {
      std::vector<std::string> c{r.label};
      if (r.ips) {
        c.insert(c.end(), {detail::csv_number(r.ips->w_stat), detail::csv_number(r.ips->p_value),
                           std::to_string(r.ips->n_series)});
      } else {
        c.insert(c.end(), {"", "", ""});
      }
      if (r.fisher) {
        c.insert(c.end(), {detail::csv_number(r.fisher->statistic), std::to_string(r.fisher->df),
                           detail::csv_number(r.fisher->p_value)});
      } else {
        c.insert(c.end(), {"", "", ""});
      }
      write_csv_row(out, c);
    }
    return out.str();
  }
  const bool md = format == TableFormat::markdown;
  const std::vector<std::string> header{"Variables", "IPS", "ADF-Fisher"};
  out << (md ? detail::markdown_row(header) + detail::markdown_rule(3) : detail::tab_row(header));
  for (const auto& r : rows) {
    std::vector<std::string> c{r.label, r.ips ? unitroot_cell(r.ips->w_stat, r.ips->p_value) : "",
                               r.fisher ? unitroot_cell(r.fisher->statistic, r.fisher->p_value) : ""};
    out << (md ? detail::markdown_row(c) : detail::tab_row(c));
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Hausman block

inline std::string render_hausman_block(const TestResult& test, const std::vector<std::string>& names,
                                        const Eigen::VectorXd& b, const Eigen::VectorXd& B,
                                        const Eigen::VectorXd& se_diff,
                                        TableFormat format = TableFormat::text) {
  const auto m = static_cast<Eigen::Index>(names.size());
  if (m < 1) throw ConfigError("render_hausman_block: no common coefficients");
  if (b.size() != m || B.size() != m || se_diff.size() != m)
    throw ConfigError("render_hausman_block: dimension mismatch");
  const bool npd = test.flags.count("not_positive_definite") > 0;

  std::ostringstream out;
  if (format == TableFormat::csv) {
    write_csv_row(out, {"variable", "b", "B", "b_minus_B", "se_diff"});
    for (Eigen::Index j = 0; j < m; ++j) {
      write_csv_row(out, {names[static_cast<std::size_t>(j)], detail::csv_number(b[j]), detail::csv_number(B[j]),
                          detail::csv_number(b[j] - B[j]), detail::csv_number(se_diff[j])});
    }
    write_csv_row(out, {"chi2", detail::csv_number(test.statistic), "", "", ""});
    write_csv_row(out, {"df", std::to_string(test.df), "", "", ""});
    write_csv_row(out, {"p_value", detail::csv_number(test.p_value), "", "", ""});
    write_csv_row(out, {"not_positive_definite", npd ? "1" : "0", "", "", ""});
    return out.str();
  }

  const bool md = format == TableFormat::markdown;
  auto row_out = [&](const std::vector<std::string>& cells) {
    out << (md ? detail::markdown_row(cells) : detail::tab_row(cells));
  };
  if (!md) out << "Coefficients\n\n";
  row_out({"", "(b)", "(B)", "(b-B)", "sqrt(diag(V_b-V_B))"});
  if (md) out << detail::markdown_rule(5);
  row_out({"", "Fixed effect", "Random effect", "Difference", "S.E."});
  for (Eigen::Index j = 0; j < m; ++j) {
    row_out({names[static_cast<std::size_t>(j)], format_general(b[j]), format_general(B[j]),
             format_general(b[j] - B[j]), format_general(se_diff[j])});
  }
  out << "\n";
  out << "b = fixed effects, consistent under H0 and H1\n";
  out << "B = random effects, efficient under H0 and inconsistent under H1\n";
  out << "H0: the coefficient differences are not systematic\n\n";
  out << "χ²(" << test.df << ") = " << format_fixed(test.statistic, 2) << "\n";
  out << "Prob>χ² = " << format_fixed(test.p_value, 4) << "\n";
  if (npd) out << "(V_b-V_B is not positive definite)\n";
  return out.str();
}

inline std::string render_hausman_block(const TestResult& test, const HausmanComparison& c,
                                        TableFormat format = TableFormat::text) {
  return render_hausman_block(test, c.names, c.b, c.B, c.se_difference(), format);
}

}  // namespace gravity
