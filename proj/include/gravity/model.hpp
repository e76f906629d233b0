#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gravity/errors.hpp"
#include "gravity/panel.hpp"

namespace gravity {

enum class Role { continuous, dummy };

/// One model variable: the final column name plus the transforms producing it.
struct Term {
  std::string variable;
  Role role = Role::continuous;
  std::vector<TransformSpec> transforms;
  std::string label;  // display name; empty means "use variable"

  const std::string& display() const { return label.empty() ? variable : label; }
};

/// Parses a term expression.
///
///   name                 identity, continuous
///   log(e) / log1p(e)    natural log / log(1+x)
///   lag(e, k)            value of e at t-k
///   absdiff(e1, e2)      |e1 - e2|
///   dummy(name)          variable entered untransformed as a 0/1 dummy
///   dummy(partner=CHN)   derived dummy from a predicate (also year>=YYYY)
inline Term parse_term(const std::string& text);

enum class EstimatorTag { pooled_ols, fixed_effects, random_effects, hausman, iv_gmm };

inline std::string to_string(EstimatorTag tag) {
  switch (tag) {
    case EstimatorTag::pooled_ols: return "pooled_ols";
    case EstimatorTag::fixed_effects: return "fixed_effects";
    case EstimatorTag::random_effects: return "random_effects";
    case EstimatorTag::hausman: return "hausman";
    case EstimatorTag::iv_gmm: return "iv_gmm";
  }
  return "?";
}

inline EstimatorTag parse_estimator_tag(const std::string& s) {
  if (s == "pooled_ols") return EstimatorTag::pooled_ols;
  if (s == "fixed_effects") return EstimatorTag::fixed_effects;
  if (s == "random_effects") return EstimatorTag::random_effects;
  if (s == "hausman") return EstimatorTag::hausman;
  if (s == "iv_gmm") return EstimatorTag::iv_gmm;
  throw ConfigError("unknown estimator tag: " + s);
}

/// Optional restriction of the estimation sample.
struct SampleFilter {
  std::optional<int> first_year;
  std::optional<int> last_year;
  std::set<std::string> partners;  // empty = all

  bool admits(const EntityId& e, TimeIndex t) const {
    if (first_year && t.year < *first_year) return false;
    if (last_year && t.year > *last_year) return false;
    return partners.empty() || partners.count(e.partner) != 0;
  }
};

struct ModelSpec {
  Term dependent;
  std::vector<Term> regressors;
  bool include_intercept = true;
  std::vector<EstimatorTag> estimator_chain;
  std::optional<SampleFilter> sample_filter;
  std::vector<Term> instruments;  // excluded instruments, realised into RegressionProblem::Z

  void validate() const {
    if (dependent.variable.empty()) throw ConfigError("model has no dependent variable");
    std::set<std::string> seen;
    for (const auto& r : regressors) {
      if (r.variable == dependent.variable)
        throw ConfigError("dependent variable '" + r.variable + "' listed among regressors");
      if (!seen.insert(r.variable).second)
        throw ConfigError("duplicate regressor: " + r.variable);
      if (r.role == Role::dummy) {
        for (const auto& t : r.transforms) {
          if (t.kind == TransformKind::log || t.kind == TransformKind::log1p)
            throw ConfigError("dummy regressor '" + r.variable + "' must not be log-transformed");
        }
      }
    }
  }
};

inline constexpr const char* kInterceptName = "const";

struct ColumnMeta {
  std::string name;
  std::string label;
  Role role = Role::continuous;
  bool time_invariant = false;
  bool intercept = false;
};

struct DropRecord {
  EntityId entity;
  TimeIndex time;
  std::string reason;
};

struct RowKey {
  EntityId entity;
  TimeIndex time;
};

/// A realised numeric design: y, X (and optional excluded instruments Z).
struct RegressionProblem {
  std::string dependent;
  Eigen::VectorXd y;
  Eigen::MatrixXd X;
  std::vector<RowKey> row_keys;
  std::vector<ColumnMeta> columns;
  std::vector<DropRecord> drop_log;
  Eigen::MatrixXd Z;
  std::vector<std::string> instrument_names;

  std::size_t n_rows() const noexcept { return static_cast<std::size_t>(y.size()); }

  std::vector<std::string> column_names() const {
    std::vector<std::string> out;
    for (const auto& c : columns) out.push_back(c.name);
    return out;
  }

  std::optional<std::size_t> column_index(const std::string& name) const {
    for (std::size_t j = 0; j < columns.size(); ++j)
      if (columns[j].name == name) return j;
    return std::nullopt;
  }

  bool has_intercept() const {
    return std::any_of(columns.begin(), columns.end(), [](const auto& c) { return c.intercept; });
  }
};

/// Rows grouped by entity, in order of first appearance.
struct EntityGroups {
  std::vector<EntityId> ids;
  std::vector<std::size_t> group_of_row;
  std::vector<std::size_t> sizes;

  std::size_t count() const noexcept { return ids.size(); }
};

inline EntityGroups group_rows(const std::vector<RowKey>& keys) {
  EntityGroups g;
  std::map<EntityId, std::size_t> index;
  g.group_of_row.reserve(keys.size());
  for (const auto& k : keys) {
    auto [it, inserted] = index.emplace(k.entity, g.ids.size());
    if (inserted) {
      g.ids.push_back(k.entity);
      g.sizes.push_back(0);
    }
    g.group_of_row.push_back(it->second);
    ++g.sizes[it->second];
  }
  return g;
}

/// Per-group means of each column of `m`.
inline Eigen::MatrixXd group_means(const EntityGroups& g, const Eigen::MatrixXd& m) {
  Eigen::MatrixXd means = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(g.count()), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r) means.row(g.group_of_row[r]) += m.row(r);
  for (std::size_t i = 0; i < g.count(); ++i) means.row(i) /= static_cast<double>(g.sizes[i]);
  return means;
}

// ---------------------------------------------------------------------------
// Term parsing

namespace detail {

class TermParser {
 public:
  explicit TermParser(const std::string& text) : s_(text) {}

  Term parse() {
    Term term;
    skip_ws();
    term.variable = expr(term, true);
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return term;
  }

 private:
  std::string expr(Term& term, bool top) {
    const std::string name = ident();
    skip_ws();
    if (!peek('(')) return name;
    ++pos_;
    skip_ws();
    if (name == "log" || name == "log1p") {
      const std::string inner = expr(term, false);
      close();
      auto t = name == "log" ? TransformSpec::log_of(inner) : TransformSpec::log1p_of(inner);
      term.transforms.push_back(t);
      return t.target;
    }
    if (name == "lag") {
      const std::string inner = expr(term, false);
      comma();
      const int k = integer();
      close();
      auto t = TransformSpec::lag_of(inner, k);
      term.transforms.push_back(t);
      return t.target;
    }
    if (name == "absdiff") {
      const std::string a = expr(term, false);
      comma();
      const std::string b = expr(term, false);
      close();
      auto t = TransformSpec::absdiff_of(a, b);
      term.transforms.push_back(t);
      return t.target;
    }
    if (name == "dummy") {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && s_[pos_] != ')') ++pos_;
      std::string arg = s_.substr(start, pos_ - start);
      while (!arg.empty() && std::isspace(static_cast<unsigned char>(arg.back()))) arg.pop_back();
      close();
      if (!top) fail("dummy(...) must be the outermost expression");
      term.role = Role::dummy;
      if (arg.find_first_of("=<>") == std::string::npos) {
        if (arg.empty() || !valid_ident(arg)) fail("bad dummy argument");
        return arg;
      }
      auto t = TransformSpec::dummy_of(arg);
      term.transforms.push_back(t);
      return t.target;
    }
    fail("unknown function '" + name + "'");
    return {};
  }

  static bool valid_ident(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
    });
  }

  std::string ident() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '.'))
      ++pos_;
    if (pos_ == start) fail("expected a name");
    return s_.substr(start, pos_ - start);
  }

  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    skip_ws();
    return std::stoi(s_.substr(start, pos_ - start));
  }

  void comma() {
    skip_ws();
    if (!peek(',')) fail("expected ','");
    ++pos_;
    skip_ws();
  }

  void close() {
    skip_ws();
    if (!peek(')')) fail("expected ')'");
    ++pos_;
  }

  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ConfigError("cannot parse term '" + s_ + "': " + msg + " at offset " +
                      std::to_string(pos_));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Term parse_term(const std::string& text) { return detail::TermParser(text).parse(); }

// ---------------------------------------------------------------------------
// Realisation

/// Applies every transform the model needs; targets that already exist are reused.
inline PanelDataset prepare_model(PanelDataset data, const ModelSpec& spec,
                                  DomainPolicy log_policy = DomainPolicy::mask) {
  auto realise = [&](const Term& term) {
    for (auto t : term.transforms) {
      if (data.has(t.target)) continue;
      t.on_domain_error = log_policy;
      data = apply_transform(data, t);
    }
  };
  realise(spec.dependent);
  for (const auto& r : spec.regressors) realise(r);
  for (const auto& z : spec.instruments) realise(z);
  return data;
}

namespace detail {

/// Raw variables a term reads, in order.
inline std::vector<std::string> raw_sources(const Term& term) {
  std::set<std::string> produced;
  std::vector<std::string> out;
  for (const auto& t : term.transforms) {
    for (const auto& s : t.sources)
      if (!produced.count(s) && std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    produced.insert(t.target);
  }
  if (out.empty() && term.transforms.empty()) out.push_back(term.variable);
  return out;
}

inline std::string drop_reason(const PanelDataset& data, const Term& term, std::size_t cell) {
  const auto& v = data.variable(term.variable);
  switch (v.state[cell]) {
    case CellState::lag_unavailable: return "lagged predecessor missing";
    case CellState::domain_excluded: {
      const auto src = raw_sources(term);
      return "outside log domain: " + (src.empty() ? term.variable : src.front());
    }
    default: break;
  }
  for (const auto& s : raw_sources(term)) {
    if (data.has(s) && data.variable(s).state[cell] == CellState::absent) return "missing: " + s;
  }
  return "missing: " + term.variable;
}

inline bool constant_within_entities(const EntityGroups& g, const Eigen::VectorXd& col) {
  std::vector<double> first(g.count(), 0.0);
  std::vector<bool> seen(g.count(), false);
  const double scale = std::max(1.0, col.cwiseAbs().maxCoeff());
  for (Eigen::Index r = 0; r < col.size(); ++r) {
    const auto i = g.group_of_row[r];
    if (!seen[i]) {
      seen[i] = true;
      first[i] = col[r];
    } else if (std::abs(col[r] - first[i]) > 1e-12 * scale) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

/// Builds y, X (intercept first, then regressors in spec order) and Z.
///
/// Rows are visited entity-major. A row is dropped, with its reason logged,
/// when the sample filter excludes it or any required cell is not present.
inline RegressionProblem design_matrix(const PanelDataset& data, const ModelSpec& spec) {
  spec.validate();
  std::vector<const Term*> required{&spec.dependent};
  for (const auto& r : spec.regressors) required.push_back(&r);
  for (const auto& z : spec.instruments) required.push_back(&z);
  for (const Term* t : required) {
    if (!data.has(t->variable)) throw DataError("model variable not in dataset: " + t->variable);
  }

  std::set<std::string> names;
  if (spec.include_intercept) names.insert(kInterceptName);
  for (const auto& r : spec.regressors) {
    if (!names.insert(r.variable).second) throw ConfigError("duplicate column name: " + r.variable);
    if (r.role == Role::dummy) {
      const auto& v = data.variable(r.variable);
      for (std::size_t c = 0; c < v.values.size(); ++c) {
        if (v.state[c] == CellState::present && v.values[c] != 0.0 && v.values[c] != 1.0)
          throw DataError("dummy regressor '" + r.variable + "' holds a value other than 0/1");
      }
    }
  }

  RegressionProblem p;
  p.dependent = spec.dependent.variable;
  if (spec.include_intercept) p.columns.push_back({kInterceptName, "Constant", Role::continuous, true, true});
  for (const auto& r : spec.regressors) p.columns.push_back({r.variable, r.display(), r.role, false, false});
  for (const auto& z : spec.instruments) p.instrument_names.push_back(z.variable);

  std::vector<std::size_t> kept_cells;
  for (std::size_t e = 0; e < data.n_entities(); ++e) {
    for (std::size_t t = 0; t < data.n_times(); ++t) {
      const auto c = data.cell(e, t);
      const EntityId& id = data.entities()[e];
      const TimeIndex time = data.times()[t];
      if (spec.sample_filter && !spec.sample_filter->admits(id, time)) {
        p.drop_log.push_back({id, time, "excluded by sample filter"});
        continue;
      }
      const Term* missing = nullptr;
      for (const Term* term : required) {
        if (data.variable(term->variable).state[c] != CellState::present) {
          missing = term;
          break;
        }
      }
      if (missing) {
        p.drop_log.push_back({id, time, detail::drop_reason(data, *missing, c)});
        continue;
      }
      kept_cells.push_back(c);
      p.row_keys.push_back({id, time});
    }
  }
  if (kept_cells.empty()) throw DataError("no observations retained for model of " + p.dependent);

  const auto n = static_cast<Eigen::Index>(kept_cells.size());
  const auto k = static_cast<Eigen::Index>(p.columns.size());
  p.y.resize(n);
  p.X.resize(n, k);
  p.Z.resize(n, static_cast<Eigen::Index>(spec.instruments.size()));
  const auto& yv = data.variable(spec.dependent.variable);
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto c = kept_cells[r];
    p.y[r] = yv.values[c];
    Eigen::Index j = 0;
    if (spec.include_intercept) p.X(r, j++) = 1.0;
    for (const auto& reg : spec.regressors) p.X(r, j++) = data.variable(reg.variable).values[c];
    for (std::size_t z = 0; z < spec.instruments.size(); ++z)
      p.Z(r, static_cast<Eigen::Index>(z)) = data.variable(spec.instruments[z].variable).values[c];
  }

  const auto groups = group_rows(p.row_keys);
  for (Eigen::Index j = 0; j < k; ++j) {
    if (!p.columns[j].intercept)
      p.columns[j].time_invariant = detail::constant_within_entities(groups, p.X.col(j));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Entity transforms

struct WithinTransform {
  RegressionProblem problem;
  std::vector<std::string> dropped_columns;
};

namespace detail {

/// Subtracts weight * entity mean from every row; a second pass removes the
/// rounding left in the entity means when weight is 1.
inline void subtract_entity_means(const EntityGroups& g, Eigen::MatrixXd& m,
                                  const std::vector<double>& weight) {
  if (m.cols() == 0) return;
  const Eigen::MatrixXd means = group_means(g, m);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    const double w = weight[g.group_of_row[r]];
    if (w != 0.0) m.row(r) -= w * means.row(g.group_of_row[r]);
  }
}

}  // namespace detail

/// Within (fixed-effects) transform. Columns without within-entity variation
/// (intercept, distance, language, ...) are removed and listed.
inline WithinTransform demean_within(const RegressionProblem& p) {
  const auto g = group_rows(p.row_keys);
  if (std::none_of(g.sizes.begin(), g.sizes.end(), [](std::size_t s) { return s >= 2; }))
    throw NumericalError("within transform needs an entity with at least 2 observations");

  const std::vector<double> ones(g.count(), 1.0);
  Eigen::MatrixXd X = p.X;
  Eigen::MatrixXd y = p.y;
  Eigen::MatrixXd Z = p.Z;
  for (int pass = 0; pass < 2; ++pass) {
    detail::subtract_entity_means(g, X, ones);
    detail::subtract_entity_means(g, y, ones);
    detail::subtract_entity_means(g, Z, ones);
  }

  WithinTransform out;
  std::vector<Eigen::Index> keep;
  for (Eigen::Index j = 0; j < X.cols(); ++j) {
    const double scale = std::max(1.0, p.X.col(j).cwiseAbs().maxCoeff());
    const bool no_variation = X.rows() == 0 || X.col(j).cwiseAbs().maxCoeff() <= 1e-9 * scale;
    if (no_variation || p.columns[j].intercept)
      out.dropped_columns.push_back(p.columns[j].name);
    else
      keep.push_back(j);
  }
  if (keep.empty()) throw NumericalError("no within variation: every column is time-invariant");

  RegressionProblem& q = out.problem;
  q.dependent = p.dependent;
  q.y = y.col(0);
  q.X.resize(X.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t j = 0; j < keep.size(); ++j) {
    q.X.col(static_cast<Eigen::Index>(j)) = X.col(keep[j]);
    q.columns.push_back(p.columns[keep[j]]);
  }
  q.row_keys = p.row_keys;
  q.drop_log = p.drop_log;
  q.Z = Z;
  q.instrument_names = p.instrument_names;
  return out;
}

/// Random-effects quasi-demeaning: v_it - lambda_i * mean_i(v) on y, X and Z.
inline RegressionProblem quasi_demean(const RegressionProblem& p,
                                      const std::map<EntityId, double>& lambda_per_entity) {
  const auto g = group_rows(p.row_keys);
  std::vector<double> weight(g.count());
  for (std::size_t i = 0; i < g.count(); ++i) {
    auto it = lambda_per_entity.find(g.ids[i]);
    if (it == lambda_per_entity.end())
      throw ConfigError("no quasi-demeaning weight for entity " + g.ids[i].str());
    if (!(it->second >= 0.0 && it->second <= 1.0))
      throw ConfigError("quasi-demeaning weight outside [0,1] for entity " + g.ids[i].str());
    weight[i] = it->second;
  }
  RegressionProblem q = p;
  Eigen::MatrixXd y = p.y;
  detail::subtract_entity_means(g, q.X, weight);
  detail::subtract_entity_means(g, y, weight);
  detail::subtract_entity_means(g, q.Z, weight);
  q.y = y.col(0);
  return q;
}

}  // namespace gravity
