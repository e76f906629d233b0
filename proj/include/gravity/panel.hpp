#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "gravity/errors.hpp"

namespace gravity {

inline bool is_iso3(std::string_view code) noexcept {
  return code.size() == 3 &&
         std::all_of(code.begin(), code.end(), [](char c) { return c >= 'A' && c <= 'Z'; });
}

/// A directed country pair (reporter -> partner).
struct EntityId {
  std::string reporter;
  std::string partner;

  EntityId() = default;
  EntityId(std::string reporter_code, std::string partner_code)
      : reporter(std::move(reporter_code)), partner(std::move(partner_code)) {
    if (!is_iso3(reporter) || !is_iso3(partner)) {
      throw DataError("entity codes must be 3 uppercase letters: '" + reporter + "', '" + partner +
                      "'");
    }
    if (reporter == partner) throw DataError("entity reporter equals partner: " + reporter);
  }

  std::string str() const { return reporter + "-" + partner; }

  auto operator<=>(const EntityId&) const = default;
  bool operator==(const EntityId&) const = default;
};

/// Calendar year of an annual panel.
struct TimeIndex {
  int year = 0;

  auto operator<=>(const TimeIndex&) const = default;
  bool operator==(const TimeIndex&) const = default;
};

enum class Unit { none, usd, km, ratio, index, dummy };

inline std::string to_string(Unit u) {
  switch (u) {
    case Unit::usd: return "usd";
    case Unit::km: return "km";
    case Unit::ratio: return "ratio";
    case Unit::index: return "index";
    case Unit::dummy: return "dummy";
    case Unit::none: break;
  }
  return "none";
}

/// Why a cell holds (or does not hold) a value.
enum class CellState : std::uint8_t {
  present,
  absent,           // never observed
  lag_unavailable,  // lagged predecessor outside the window or absent
  domain_excluded,  // masked by a transform whose domain excludes the source value
};

/// Entity x time grid of one variable, stored entity-major.
struct Variable {
  Unit unit = Unit::none;
  std::vector<double> values;
  std::vector<CellState> state;
};

/// Rectangular entity x time store of named variables with a presence mask.
///
/// Entities and times are held in ascending order. Variables are shared
/// immutable grids, so deriving a dataset with one more variable is cheap.
class PanelDataset {
 public:
  PanelDataset() = default;

  PanelDataset(std::vector<EntityId> entities, std::vector<TimeIndex> times)
      : entities_(std::move(entities)), times_(std::move(times)) {
    std::sort(entities_.begin(), entities_.end());
    std::sort(times_.begin(), times_.end());
    if (std::adjacent_find(entities_.begin(), entities_.end()) != entities_.end())
      throw DataError("duplicate entity in panel");
    if (std::adjacent_find(times_.begin(), times_.end()) != times_.end())
      throw DataError("duplicate time index in panel");
  }

  const std::vector<EntityId>& entities() const noexcept { return entities_; }
  const std::vector<TimeIndex>& times() const noexcept { return times_; }
  std::size_t n_entities() const noexcept { return entities_.size(); }
  std::size_t n_times() const noexcept { return times_.size(); }
  std::size_t n_cells() const noexcept { return entities_.size() * times_.size(); }

  std::size_t cell(std::size_t entity, std::size_t time) const noexcept {
    return entity * times_.size() + time;
  }

  std::optional<std::size_t> entity_index(const EntityId& e) const {
    auto it = std::lower_bound(entities_.begin(), entities_.end(), e);
    if (it == entities_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - entities_.begin());
  }

  std::optional<std::size_t> time_index(TimeIndex t) const {
    auto it = std::lower_bound(times_.begin(), times_.end(), t);
    if (it == times_.end() || *it != t) return std::nullopt;
    return static_cast<std::size_t>(it - times_.begin());
  }

  bool has(const std::string& name) const { return variables_.count(name) != 0; }

  const Variable& variable(const std::string& name) const {
    auto it = variables_.find(name);
    if (it == variables_.end()) throw DataError("unknown variable: " + name);
    return *it->second;
  }

  std::vector<std::string> variable_names() const {
    std::vector<std::string> out;
    out.reserve(variables_.size());
    for (const auto& [name, _] : variables_) out.push_back(name);
    return out;
  }

  std::optional<double> value(const std::string& name, const EntityId& e, TimeIndex t) const {
    const auto ei = entity_index(e);
    const auto ti = time_index(t);
    if (!ei || !ti) return std::nullopt;
    const auto& v = variable(name);
    const auto c = cell(*ei, *ti);
    if (v.state[c] != CellState::present) return std::nullopt;
    return v.values[c];
  }

  /// Returns a copy with one more variable; validates shape and dummy/NaN invariants.
  PanelDataset with_variable(const std::string& name, Variable var) const {
    if (name.empty()) throw DataError("variable name must not be empty");
    if (has(name)) throw DataError("variable already exists: " + name);
    if (var.values.size() != n_cells() || var.state.size() != n_cells())
      throw DataError("variable '" + name + "' does not match the entity x time shape");
    for (std::size_t c = 0; c < var.values.size(); ++c) {
      if (var.state[c] != CellState::present) {
        var.values[c] = 0.0;
        continue;
      }
      if (!std::isfinite(var.values[c]))
        throw DataError("non-finite value stored as present in '" + name + "'");
      if (var.unit == Unit::dummy && var.values[c] != 0.0 && var.values[c] != 1.0)
        throw DataError("dummy variable '" + name + "' holds a value other than 0/1");
    }
    PanelDataset out = *this;
    out.variables_.emplace(name, std::make_shared<const Variable>(std::move(var)));
    return out;
  }

  /// An empty grid (all cells absent) of this panel's shape.
  Variable blank(Unit unit) const {
    return Variable{unit, std::vector<double>(n_cells(), 0.0),
                    std::vector<CellState>(n_cells(), CellState::absent)};
  }

 private:
  std::vector<EntityId> entities_;
  std::vector<TimeIndex> times_;
  std::map<std::string, std::shared_ptr<const Variable>> variables_;
};

/// One long-format datum.
struct Observation {
  EntityId entity;
  TimeIndex time;
  std::string variable;
  double value = 0.0;
};

/// Populates a panel from long-format observations.
///
/// Entity and time axes are the sorted sets of keys seen; cells without an
/// observation are masked absent. Duplicate (entity, time, variable) keys are
/// rejected. Units default to Unit::none unless given.
inline PanelDataset build_panel(std::span<const Observation> observations,
                                const std::map<std::string, Unit>& units = {}) {
  std::set<EntityId> entity_set;
  std::set<TimeIndex> time_set;
  std::set<std::string> names;
  for (const auto& o : observations) {
    if (o.entity.reporter == o.entity.partner)
      throw DataError("entity reporter equals partner: " + o.entity.reporter);
    entity_set.insert(o.entity);
    time_set.insert(o.time);
    names.insert(o.variable);
  }
  PanelDataset panel({entity_set.begin(), entity_set.end()}, {time_set.begin(), time_set.end()});

  std::map<std::string, Variable> grids;
  for (const auto& name : names) {
    auto it = units.find(name);
    grids.emplace(name, panel.blank(it == units.end() ? Unit::none : it->second));
  }
  for (const auto& o : observations) {
    auto& grid = grids.at(o.variable);
    const auto c = panel.cell(*panel.entity_index(o.entity), *panel.time_index(o.time));
    if (grid.state[c] == CellState::present) {
      throw DataError("duplicate observation (" + o.entity.str() + ", " +
                      std::to_string(o.time.year) + ", " + o.variable + ")");
    }
    if (!std::isfinite(o.value)) {
      throw DataError("non-finite value at (" + o.entity.str() + ", " +
                      std::to_string(o.time.year) + ", " + o.variable + ")");
    }
    grid.values[c] = o.value;
    grid.state[c] = CellState::present;
  }
  for (auto& [name, grid] : grids) panel = panel.with_variable(name, std::move(grid));
  return panel;
}

// ---------------------------------------------------------------------------
// Transforms

enum class TransformKind { identity, log, log1p, lag, absdiff, dummy };

/// What to do with a source value outside a transform's domain (log of x <= 0).
enum class DomainPolicy { fail, mask };

struct TransformSpec {
  TransformKind kind = TransformKind::identity;
  std::vector<std::string> sources;
  std::string target;
  int lag = 0;
  std::string predicate;  // dummy only: "partner=CHN", "year>=2003" or "positive"
  DomainPolicy on_domain_error = DomainPolicy::fail;

  static TransformSpec log_of(std::string source, std::string target = {}) {
    if (target.empty()) target = "ln_" + source;
    return {TransformKind::log, {std::move(source)}, std::move(target), 0, {}, DomainPolicy::fail};
  }
  static TransformSpec log1p_of(std::string source, std::string target = {}) {
    if (target.empty()) target = "ln1p_" + source;
    return {TransformKind::log1p, {std::move(source)}, std::move(target), 0, {}, DomainPolicy::fail};
  }
  static TransformSpec lag_of(std::string source, int k, std::string target = {}) {
    if (target.empty()) target = source + "_lag" + std::to_string(k);
    TransformSpec t{TransformKind::lag, {std::move(source)}, std::move(target), 0, {}, DomainPolicy::fail};
    t.lag = k;
    return t;
  }
  static TransformSpec absdiff_of(std::string a, std::string b, std::string target = {}) {
    if (target.empty()) target = "absdiff_" + a + "_" + b;
    return {TransformKind::absdiff, {std::move(a), std::move(b)}, std::move(target), 0, {}, DomainPolicy::fail};
  }
  static TransformSpec dummy_of(std::string predicate, std::vector<std::string> sources = {},
                                std::string target = {}) {
    if (target.empty()) {
      target = "d_";
      for (char c : predicate) target += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    }
    TransformSpec t{TransformKind::dummy, std::move(sources), std::move(target), 0, {}, DomainPolicy::fail};
    t.predicate = std::move(predicate);
    return t;
  }
  static TransformSpec identity_of(std::string source, std::string target) {
    return {TransformKind::identity, {std::move(source)}, std::move(target), 0, {}, DomainPolicy::fail};
  }
};

namespace detail {

inline std::string cell_name(const PanelDataset& p, std::size_t e, std::size_t t,
                             const std::string& var) {
  return "(" + p.entities()[e].str() + ", " + std::to_string(p.times()[t].year) + ", " + var + ")";
}

inline std::function<double(const PanelDataset&, std::size_t, std::size_t, double)>
parse_predicate(const std::string& predicate, bool has_source) {
  auto fail = [&] { return ConfigError("unsupported dummy predicate: '" + predicate + "'"); };
  if (predicate == "positive") {
    if (!has_source) throw ConfigError("predicate 'positive' needs a source variable");
    return [](const PanelDataset&, std::size_t, std::size_t, double v) { return v > 0 ? 1.0 : 0.0; };
  }
  if (predicate.rfind("partner=", 0) == 0) {
    const std::string code = predicate.substr(8);
    if (!is_iso3(code)) throw fail();
    return [code](const PanelDataset& p, std::size_t e, std::size_t, double) {
      return p.entities()[e].partner == code ? 1.0 : 0.0;
    };
  }
  if (predicate.rfind("year>=", 0) == 0) {
    int year = 0;
    try {
      std::size_t used = 0;
      year = std::stoi(predicate.substr(6), &used);
      if (used != predicate.size() - 6) throw fail();
    } catch (const std::logic_error&) {
      throw fail();
    }
    return [year](const PanelDataset& p, std::size_t, std::size_t t, double) {
      return p.times()[t].year >= year ? 1.0 : 0.0;
    };
  }
  throw fail();
}

}  // namespace detail

/// Derives `t.target` from its sources and returns the extended dataset.
///
/// Non-present source cells propagate their state. `lag(k)` reads the source at
/// year t-k and marks the cell lag_unavailable when that year is outside the
/// panel or the predecessor is not present.
inline PanelDataset apply_transform(const PanelDataset& data, const TransformSpec& t) {
  const auto need_sources = [&](std::size_t n) {
    if (t.sources.size() != n)
      throw ConfigError("transform '" + t.target + "' expects " + std::to_string(n) + " source(s)");
    for (const auto& s : t.sources)
      if (!data.has(s)) throw DataError("unknown source variable: " + s);
  };
  if (t.target.empty()) throw ConfigError("transform target name is empty");

  const std::size_t ne = data.n_entities();
  const std::size_t nt = data.n_times();

  switch (t.kind) {
    case TransformKind::identity: {
      need_sources(1);
      return data.with_variable(t.target, data.variable(t.sources[0]));
    }
    case TransformKind::log:
    case TransformKind::log1p: {
      need_sources(1);
      const auto& src = data.variable(t.sources[0]);
      if (src.unit == Unit::dummy)
        throw ConfigError("dummy variable '" + t.sources[0] + "' cannot be log-transformed");
      const bool plus_one = t.kind == TransformKind::log1p;
      Variable out = data.blank(Unit::none);
      for (std::size_t e = 0; e < ne; ++e) {
        for (std::size_t k = 0; k < nt; ++k) {
          const auto c = data.cell(e, k);
          out.state[c] = src.state[c];
          if (src.state[c] != CellState::present) continue;
          const double arg = plus_one ? 1.0 + src.values[c] : src.values[c];
          if (!(arg > 0.0)) {
            if (t.on_domain_error == DomainPolicy::fail) {
              throw DataError("log of non-positive value " + std::to_string(src.values[c]) +
                              " at " + detail::cell_name(data, e, k, t.sources[0]));
            }
            out.state[c] = CellState::domain_excluded;
            continue;
          }
          out.values[c] = plus_one ? std::log1p(src.values[c]) : std::log(arg);
        }
      }
      return data.with_variable(t.target, std::move(out));
    }
    case TransformKind::lag: {
      need_sources(1);
      if (t.lag < 1) throw ConfigError("lag must be >= 1 for '" + t.target + "'");
      const auto& src = data.variable(t.sources[0]);
      Variable out = data.blank(src.unit);
      for (std::size_t k = 0; k < nt; ++k) {
        const auto prev = data.time_index(TimeIndex{data.times()[k].year - t.lag});
        for (std::size_t e = 0; e < ne; ++e) {
          const auto c = data.cell(e, k);
          if (!prev || src.state[data.cell(e, *prev)] != CellState::present) {
            out.state[c] = CellState::lag_unavailable;
            continue;
          }
          out.state[c] = CellState::present;
          out.values[c] = src.values[data.cell(e, *prev)];
        }
      }
      return data.with_variable(t.target, std::move(out));
    }
    case TransformKind::absdiff: {
      need_sources(2);
      const auto& a = data.variable(t.sources[0]);
      const auto& b = data.variable(t.sources[1]);
      Variable out = data.blank(a.unit == b.unit ? a.unit : Unit::none);
      for (std::size_t c = 0; c < data.n_cells(); ++c) {
        if (a.state[c] != CellState::present) {
          out.state[c] = a.state[c];
        } else if (b.state[c] != CellState::present) {
          out.state[c] = b.state[c];
        } else {
          out.state[c] = CellState::present;
          out.values[c] = std::abs(a.values[c] - b.values[c]);
        }
      }
      return data.with_variable(t.target, std::move(out));
    }
    case TransformKind::dummy: {
      if (t.sources.size() > 1) throw ConfigError("dummy transform takes at most one source");
      for (const auto& s : t.sources)
        if (!data.has(s)) throw DataError("unknown source variable: " + s);
      const Variable* src = t.sources.empty() ? nullptr : &data.variable(t.sources[0]);
      const auto pred = detail::parse_predicate(t.predicate, src != nullptr);
      Variable out = data.blank(Unit::dummy);
      for (std::size_t e = 0; e < ne; ++e) {
        for (std::size_t k = 0; k < nt; ++k) {
          const auto c = data.cell(e, k);
          if (src && src->state[c] != CellState::present) {
            out.state[c] = src->state[c];
            continue;
          }
          out.state[c] = CellState::present;
          out.values[c] = pred(data, e, k, src ? src->values[c] : 0.0);
        }
      }
      return data.with_variable(t.target, std::move(out));
    }
  }
  throw ConfigError("unknown transform kind");
}

}  // namespace gravity
