#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "gravity/csv.hpp"
#include "gravity/errors.hpp"
#include "gravity/panel.hpp"

namespace gravity {

/// The exporter every study panel is built around.
inline constexpr const char* kReporter = "PER";

struct TradeFlowRecord {
  std::string reporter;
  std::string partner;
  int year = 0;
  double export_value = 0.0;  // USD

  bool operator==(const TradeFlowRecord&) const = default;
};

enum class Indicator { gdp_usd, gnipc_usd, gdppc_usd, inflation_rate, fx_rate, cpi_index };

inline std::string to_string(Indicator i) {
  switch (i) {
    case Indicator::gdp_usd: return "gdp_usd";
    case Indicator::gnipc_usd: return "gnipc_usd";
    case Indicator::gdppc_usd: return "gdppc_usd";
    case Indicator::inflation_rate: return "inflation_rate";
    case Indicator::fx_rate: return "fx_rate";
    case Indicator::cpi_index: return "cpi_index";
  }
  return "?";
}

inline std::optional<Indicator> parse_indicator(const std::string& s) {
  for (auto i : {Indicator::gdp_usd, Indicator::gnipc_usd, Indicator::gdppc_usd,
                 Indicator::inflation_rate, Indicator::fx_rate, Indicator::cpi_index}) {
    if (to_string(i) == s) return i;
  }
  return std::nullopt;
}

/// inflation_rate is a fraction per year (0.033 for 3.3%); fx_rate is local
/// currency per USD.
struct IndicatorRecord {
  std::string country;
  int year = 0;
  Indicator indicator = Indicator::gdp_usd;
  double value = 0.0;

  bool operator==(const IndicatorRecord&) const = default;
  auto operator<=>(const IndicatorRecord& o) const {
    return std::tie(indicator, country, year, value) <=> std::tie(o.indicator, o.country, o.year, o.value);
  }
};

struct PairStaticRecord {
  std::string partner;
  double distance_km = 0.0;
  int common_language = 0;
  int common_border = 0;
};

enum class Organization { APEC, CAN, MERCOSUR, EU };

inline std::string to_string(Organization o) {
  switch (o) {
    case Organization::APEC: return "APEC";
    case Organization::CAN: return "CAN";
    case Organization::MERCOSUR: return "MERCOSUR";
    case Organization::EU: return "EU";
  }
  return "?";
}

inline std::optional<Organization> parse_organization(const std::string& s) {
  for (auto o : {Organization::APEC, Organization::CAN, Organization::MERCOSUR, Organization::EU})
    if (to_string(o) == s) return o;
  return std::nullopt;
}

enum class MembershipStatus { member, associate };

struct MembershipRecord {
  Organization organization = Organization::APEC;
  std::string country;
  int accession_year = 0;
  MembershipStatus status = MembershipStatus::member;
};

/// Accession years per (organization, country); one row per pair.
class MembershipTable {
 public:
  void add(const MembershipRecord& r) {
    if (!is_iso3(r.country)) throw DataError("membership: invalid country code '" + r.country + "'");
    const auto key = std::make_pair(r.organization, r.country);
    if (rows_.count(key))
      throw DataError("membership: duplicate row for " + to_string(r.organization) + " " + r.country);
    rows_[key] = r;
  }

  std::optional<int> accession(Organization org, const std::string& country) const {
    auto it = rows_.find({org, country});
    if (it == rows_.end()) return std::nullopt;
    return it->second.accession_year;
  }

  bool listed(Organization org, const std::string& country) const {
    return rows_.count({org, country}) != 0;
  }

  bool member_in(Organization org, const std::string& country, int year) const {
    auto a = accession(org, country);
    return a && year >= *a;
  }

  std::vector<MembershipRecord> records() const {
    std::vector<MembershipRecord> out;
    for (const auto& [k, v] : rows_) out.push_back(v);
    return out;
  }

 private:
  std::map<std::pair<Organization, std::string>, MembershipRecord> rows_;
};

namespace detail {

inline std::string iso3_field(const CsvTable& t, std::size_t row, const std::string& column,
                              const std::string& source) {
  const auto& v = t.field(row, column);
  if (!is_iso3(v)) {
    throw DataError(source + " line " + std::to_string(t.line_numbers[row]) + ": invalid ISO3 code in column '" +
                    column + "': '" + v + "'");
  }
  return v;
}

inline int flag_field(const CsvTable& t, std::size_t row, const std::string& column,
                      const std::string& source) {
  const int v = parse_integer(t.field(row, column), column, t.line_numbers[row], source);
  if (v != 0 && v != 1) {
    throw DataError(source + " line " + std::to_string(t.line_numbers[row]) + ": column '" + column +
                    "' must be 0 or 1");
  }
  return v;
}

}  // namespace detail

/// `reporter,partner,year,export_value_usd`
inline std::vector<TradeFlowRecord> read_trade_csv(std::istream& in, const std::string& source = "trade") {
  const auto t = read_csv(in, {"reporter", "partner", "year", "export_value_usd"}, source);
  std::vector<TradeFlowRecord> out;
  std::set<std::tuple<std::string, std::string, int>> seen;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto line = t.line_numbers[r];
    TradeFlowRecord rec;
    rec.reporter = detail::iso3_field(t, r, "reporter", source);
    rec.partner = detail::iso3_field(t, r, "partner", source);
    rec.year = parse_integer(t.field(r, "year"), "year", line, source);
    rec.export_value = parse_number(t.field(r, "export_value_usd"), "export_value_usd", line, source);
    if (rec.export_value < 0.0)
      throw DataError(source + " line " + std::to_string(line) + ": negative export value");
    if (rec.reporter == rec.partner)
      throw DataError(source + " line " + std::to_string(line) + ": reporter equals partner");
    if (!seen.insert({rec.reporter, rec.partner, rec.year}).second)
      throw DataError(source + " line " + std::to_string(line) + ": duplicate flow " + rec.reporter +
                      "-" + rec.partner + " " + std::to_string(rec.year));
    out.push_back(rec);
  }
  return out;
}

/// `country,year,indicator,value`
inline std::vector<IndicatorRecord> read_indicator_csv(std::istream& in,
                                                       const std::string& source = "indicators") {
  const auto t = read_csv(in, {"country", "year", "indicator", "value"}, source);
  std::vector<IndicatorRecord> out;
  std::set<std::tuple<std::string, int, Indicator>> seen;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto line = t.line_numbers[r];
    const auto where = source + " line " + std::to_string(line) + ": ";
    IndicatorRecord rec;
    rec.country = detail::iso3_field(t, r, "country", source);
    rec.year = parse_integer(t.field(r, "year"), "year", line, source);
    const auto kind = parse_indicator(t.field(r, "indicator"));
    if (!kind) throw DataError(where + "unknown indicator '" + t.field(r, "indicator") + "'");
    rec.indicator = *kind;
    rec.value = parse_number(t.field(r, "value"), "value", line, source);
    if (rec.indicator != Indicator::inflation_rate && rec.value <= 0.0)
      throw DataError(where + to_string(rec.indicator) + " must be positive");
    if (!seen.insert({rec.country, rec.year, rec.indicator}).second)
      throw DataError(where + "duplicate " + to_string(rec.indicator) + " for " + rec.country + " " +
                      std::to_string(rec.year));
    out.push_back(rec);
  }
  return out;
}

/// `partner,distance_km,common_language,common_border`
inline std::vector<PairStaticRecord> read_pair_static_csv(std::istream& in,
                                                          const std::string& source = "pair statics") {
  const auto t = read_csv(in, {"partner", "distance_km", "common_language", "common_border"}, source);
  std::vector<PairStaticRecord> out;
  std::set<std::string> seen;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto line = t.line_numbers[r];
    PairStaticRecord rec;
    rec.partner = detail::iso3_field(t, r, "partner", source);
    rec.distance_km = parse_number(t.field(r, "distance_km"), "distance_km", line, source);
    if (rec.distance_km <= 0.0)
      throw DataError(source + " line " + std::to_string(line) + ": distance_km must be positive");
    rec.common_language = detail::flag_field(t, r, "common_language", source);
    rec.common_border = detail::flag_field(t, r, "common_border", source);
    if (!seen.insert(rec.partner).second)
      throw DataError(source + " line " + std::to_string(line) + ": duplicate partner " + rec.partner);
    out.push_back(rec);
  }
  return out;
}

/// `organization,country,accession_year,status`
inline MembershipTable read_membership_csv(std::istream& in, const std::string& source = "memberships") {
  const auto t = read_csv(in, {"organization", "country", "accession_year", "status"}, source);
  MembershipTable table;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto line = t.line_numbers[r];
    const auto where = source + " line " + std::to_string(line) + ": ";
    MembershipRecord rec;
    const auto org = parse_organization(t.field(r, "organization"));
    if (!org) throw DataError(where + "unknown organization '" + t.field(r, "organization") + "'");
    rec.organization = *org;
    rec.country = detail::iso3_field(t, r, "country", source);
    rec.accession_year = parse_integer(t.field(r, "accession_year"), "accession_year", line, source);
    const auto& status = t.field(r, "status");
    if (status == "member") {
      rec.status = MembershipStatus::member;
    } else if (status == "associate") {
      rec.status = MembershipStatus::associate;
    } else {
      throw DataError(where + "status must be 'member' or 'associate'");
    }
    try {
      table.add(rec);
    } catch (const DataError& e) {
      throw DataError(where + e.what());
    }
  }
  return table;
}

/// Bilateral real exchange rate: (fx_j / fx_i) * (cpi_i / cpi_j).
inline double compute_real_fx(double nominal_fx_i, double nominal_fx_j, double cpi_i, double cpi_j) {
  for (double v : {nominal_fx_i, nominal_fx_j, cpi_i, cpi_j}) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw DataError("compute_real_fx: inputs must be finite and positive");
  }
  return (nominal_fx_j / nominal_fx_i) * (cpi_i / cpi_j);
}

enum class Variant { GMP, CTP, RTP };

inline std::string to_string(Variant v) {
  switch (v) {
    case Variant::GMP: return "GMP";
    case Variant::CTP: return "CTP";
    case Variant::RTP: return "RTP";
  }
  return "?";
}

inline Variant parse_variant(const std::string& s) {
  if (s == "GMP") return Variant::GMP;
  if (s == "CTP") return Variant::CTP;
  if (s == "RTP") return Variant::RTP;
  throw ConfigError("unknown variant: " + s);
}

struct YearWindow {
  int first = 0;
  int last = 0;
};

inline YearWindow default_window(Variant v) {
  return v == Variant::RTP ? YearWindow{1994, 2015} : YearWindow{2006, 2015};
}

/// Country dummies carried by the copper panel.
inline const std::vector<std::string>& copper_country_dummies() {
  static const std::vector<std::string> codes{"IND", "KOR", "CHL", "CHN", "USA", "JPN"};
  return codes;
}

/// Variables every row of a variant's panel carries.
inline std::vector<std::string> variant_variables(Variant v) {
  std::vector<std::string> out{"exports", "gdp_exporter", "gdp_importer"};
  if (v == Variant::GMP) {
    out.insert(out.end(), {"gnipc_exporter", "gnipc_importer"});
  }
  if (v != Variant::CTP) out.push_back("gdppcdif");
  out.insert(out.end(), {"fx", "distance", "language", "border"});
  if (v == Variant::CTP) {
    out.push_back("ifl");
    for (const auto& c : copper_country_dummies()) {
      std::string name = c;
      std::transform(name.begin(), name.end(), name.begin(), ::tolower);
      out.push_back(name);
    }
    out.push_back("eu");
  } else {
    out.insert(out.end(), {"apec", "can", "mercosur"});
  }
  return out;
}

struct IngestWarning {
  std::string code;
  std::string detail;

  std::string line() const { return "WARN ingest " + code + " " + detail; }
};

struct AssembledPanel {
  PanelDataset panel;
  std::vector<IngestWarning> warnings;
};

/// Joins flows, indicators, pair statics and memberships into a study panel
/// over `window`. A (partner, year) row appears only when every variable of
/// the variant can be computed; otherwise it is left out with a warning.
inline AssembledPanel assemble_gravity_panel(const std::vector<TradeFlowRecord>& flows,
                                             const std::vector<IndicatorRecord>& indicators,
                                             const std::vector<PairStaticRecord>& statics,
                                             const MembershipTable& memberships, YearWindow window,
                                             Variant variant) {
  if (window.first > window.last) throw ConfigError("year window is empty");
  const std::string reporter = kReporter;

  std::map<std::tuple<std::string, Indicator, int>, double> ind;
  std::set<std::string> indicator_countries;
  bool any_inflation = false;
  for (const auto& r : indicators) {
    ind[{r.country, r.indicator, r.year}] = r.value;
    indicator_countries.insert(r.country);
    any_inflation = any_inflation || r.indicator == Indicator::inflation_rate;
  }
  if (!indicator_countries.count(reporter))
    throw DataError("indicators contain no rows for the reporter " + reporter);
  if (variant == Variant::CTP && !any_inflation)
    throw DataError("CTP panel requires inflation_rate indicators");

  std::map<std::string, PairStaticRecord> pair;
  for (const auto& s : statics) pair[s.partner] = s;

  AssembledPanel out;
  auto warn = [&](std::string code, std::string detail) {
    out.warnings.push_back({std::move(code), std::move(detail)});
  };

  for (const auto& m : memberships.records()) {
    if (m.accession_year > window.last)
      warn("future_accession", to_string(m.organization) + " " + m.country + " " +
                                   std::to_string(m.accession_year));
  }

  std::map<std::pair<std::string, int>, double> flow;
  std::set<std::string> partners;
  for (const auto& f : flows) {
    if (f.year < window.first || f.year > window.last) continue;
    if (f.reporter != reporter) {
      warn("other_reporter", f.reporter + "-" + f.partner + " " + std::to_string(f.year));
      continue;
    }
    flow[{f.partner, f.year}] = f.export_value;
    partners.insert(f.partner);
  }

  auto lookup = [&](const std::string& c, Indicator i, int y) -> std::optional<double> {
    auto it = ind.find({c, i, y});
    if (it == ind.end()) return std::nullopt;
    return it->second;
  };
  auto peru_in = [&](Organization org, const std::string& partner, int year) {
    return memberships.member_in(org, partner, year) && memberships.member_in(org, reporter, year);
  };

  std::map<std::string, Unit> units{{"exports", Unit::usd},        {"gdp_exporter", Unit::usd},
                                    {"gdp_importer", Unit::usd},   {"gnipc_exporter", Unit::usd},
                                    {"gnipc_importer", Unit::usd}, {"gdppcdif", Unit::usd},
                                    {"fx", Unit::ratio},           {"distance", Unit::km},
                                    {"ifl", Unit::ratio}};
  const auto required = variant_variables(variant);
  for (const auto& name : required)
    if (!units.count(name)) units[name] = Unit::dummy;

  std::vector<Observation> obs;
  for (const auto& partner : partners) {
    const EntityId id{reporter, partner};
    if (variant == Variant::RTP && !memberships.listed(Organization::MERCOSUR, partner)) {
      warn("outside_variant", id.str() + " not a MERCOSUR member or associate");
      continue;
    }
    if (!indicator_countries.count(partner)) {
      warn("unknown_partner", id.str() + " has no indicator data");
      continue;
    }
    auto st = pair.find(partner);
    if (st == pair.end()) {
      warn("unknown_partner", id.str() + " has no distance/language/border record");
      continue;
    }

    for (int year = window.first; year <= window.last; ++year) {
      std::map<std::string, double> row;
      std::vector<std::string> missing;
      auto need = [&](const std::string& name, std::optional<double> v) {
        if (v) {
          row[name] = *v;
        } else {
          missing.push_back(name);
        }
      };
      auto fl = flow.find({partner, year});
      need("exports", fl == flow.end() ? std::nullopt : std::optional<double>(fl->second));
      need("gdp_exporter", lookup(reporter, Indicator::gdp_usd, year));
      need("gdp_importer", lookup(partner, Indicator::gdp_usd, year));
      if (variant == Variant::GMP) {
        need("gnipc_exporter", lookup(reporter, Indicator::gnipc_usd, year));
        need("gnipc_importer", lookup(partner, Indicator::gnipc_usd, year));
      }
      if (variant != Variant::CTP) {
        const auto a = lookup(reporter, Indicator::gdppc_usd, year);
        const auto b = lookup(partner, Indicator::gdppc_usd, year);
        need("gdppcdif", a && b ? std::optional<double>(std::abs(*a - *b)) : std::nullopt);
      }
      {
        const auto fx_i = lookup(reporter, Indicator::fx_rate, year);
        const auto fx_j = lookup(partner, Indicator::fx_rate, year);
        const auto cpi_i = lookup(reporter, Indicator::cpi_index, year);
        const auto cpi_j = lookup(partner, Indicator::cpi_index, year);
        need("fx", fx_i && fx_j && cpi_i && cpi_j
                       ? std::optional<double>(compute_real_fx(*fx_i, *fx_j, *cpi_i, *cpi_j))
                       : std::nullopt);
      }
      row["distance"] = st->second.distance_km;
      row["language"] = st->second.common_language;
      row["border"] = st->second.common_border;
      if (variant == Variant::CTP) {
        const auto pi = lookup(partner, Indicator::inflation_rate, year);
        need("ifl", pi ? std::optional<double>(1.0 + *pi) : std::nullopt);
        for (const auto& c : copper_country_dummies()) {
          std::string name = c;
          std::transform(name.begin(), name.end(), name.begin(), ::tolower);
          row[name] = partner == c ? 1.0 : 0.0;
        }
        row["eu"] = memberships.member_in(Organization::EU, partner, year) ? 1.0 : 0.0;
      } else {
        row["apec"] = peru_in(Organization::APEC, partner, year) ? 1.0 : 0.0;
        row["can"] = peru_in(Organization::CAN, partner, year) ? 1.0 : 0.0;
        row["mercosur"] = peru_in(Organization::MERCOSUR, partner, year) ? 1.0 : 0.0;
      }

      if (!missing.empty()) {
        std::string list;
        for (const auto& m : missing) list += (list.empty() ? "" : ";") + m;
        warn("incomplete_row", id.str() + " " + std::to_string(year) + " missing=" + list);
        continue;
      }
      for (const auto& name : required) obs.push_back({id, TimeIndex{year}, name, row.at(name)});
    }
  }
  if (obs.empty()) throw DataError("no complete (partner, year) rows in the " + to_string(variant) + " window");
  out.panel = build_panel(obs, units);
  return out;
}

}  // namespace gravity
