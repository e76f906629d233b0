#pragma once

// Eigen has to be seen before httplib.h in a translation unit; include it here
// so callers need not care about header order.
#include <Eigen/Dense>

#include <httplib.h>
#include <json.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "gravity/errors.hpp"
#include "gravity/ingest.hpp"

namespace gravity {

/// World Bank indicator code, our indicator kind, and the factor taking the
/// published value to our unit (inflation is published in percent).
struct WbIndicatorCode {
  Indicator indicator;
  double scale;
};

inline const std::map<std::string, WbIndicatorCode>& wb_indicator_codes() {
  static const std::map<std::string, WbIndicatorCode> codes{
      {"NY.GDP.MKTP.CD", {Indicator::gdp_usd, 1.0}},
      {"NY.GNP.PCAP.CD", {Indicator::gnipc_usd, 1.0}},
      {"NY.GDP.PCAP.CD", {Indicator::gdppc_usd, 1.0}},
      {"FP.CPI.TOTL.ZG", {Indicator::inflation_rate, 0.01}},
      {"PA.NUS.FCRF", {Indicator::fx_rate, 1.0}},
      {"FP.CPI.TOTL", {Indicator::cpi_index, 1.0}},
  };
  return codes;
}

namespace detail {

struct SplitUrl {
  std::string origin;  // scheme://host[:port]
  std::string path;    // without trailing slash
};

inline SplitUrl split_url(const std::string& url) {
  const auto scheme = url.find("://");
  if (scheme == std::string::npos) throw ConfigError("base URL lacks a scheme: " + url);
  const auto slash = url.find('/', scheme + 3);
  SplitUrl s;
  s.origin = url.substr(0, slash);
  s.path = slash == std::string::npos ? "" : url.substr(slash);
  while (!s.path.empty() && s.path.back() == '/') s.path.pop_back();
  return s;
}

inline const nlohmann::json& envelope_field(const nlohmann::json& meta, const char* key,
                                            const std::string& url) {
  if (!meta.contains(key)) throw DataError("malformed World Bank envelope (no '" + std::string(key) + "') from " + url);
  return meta.at(key);
}

inline long envelope_int(const nlohmann::json& v, const std::string& url) {
  if (v.is_number_integer()) return v.get<long>();
  if (v.is_string()) {
    try {
      return std::stol(v.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw DataError("malformed World Bank envelope (non-integer paging field) from " + url);
}

}  // namespace detail

/// Downloads indicator series from a World Bank API v2 endpoint.
///
/// One paginated GET sequence per indicator code, pages fetched in order.
/// Null values are skipped. Records come back sorted by indicator, country
/// and year.
inline std::vector<IndicatorRecord> fetch_indicators(const std::string& base_url,
                                                     const std::vector<std::string>& indicator_codes,
                                                     const std::vector<std::string>& countries,
                                                     YearWindow years, int per_page = 1000) {
  if (indicator_codes.empty()) throw ConfigError("fetch_indicators: no indicator codes");
  if (countries.empty()) throw ConfigError("fetch_indicators: empty country list");
  if (years.first > years.last) throw ConfigError("fetch_indicators: empty year range");
  if (per_page < 1) throw ConfigError("fetch_indicators: per_page must be positive");
  std::string country_list;
  for (const auto& c : countries) {
    if (!is_iso3(c)) throw ConfigError("fetch_indicators: invalid country code " + c);
    country_list += (country_list.empty() ? "" : ";") + c;
  }

  const auto base = detail::split_url(base_url);
  httplib::Client client(base.origin);
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  client.set_follow_location(true);

  std::vector<IndicatorRecord> out;
  for (const auto& code : indicator_codes) {
    auto known = wb_indicator_codes().find(code);
    if (known == wb_indicator_codes().end())
      throw ConfigError("fetch_indicators: unsupported indicator code " + code);

    long pages = 1;
    for (long page = 1; page <= pages; ++page) {
      const std::string path = base.path + "/country/" + country_list + "/indicator/" + code +
                               "?date=" + std::to_string(years.first) + ":" + std::to_string(years.last) +
                               "&format=json&per_page=" + std::to_string(per_page) +
                               "&page=" + std::to_string(page);
      const std::string url = base.origin + path;
      auto res = client.Get(path);
      if (!res) throw DataError("GET " + url + " failed: " + httplib::to_string(res.error()));
      if (res->status < 200 || res->status >= 300)
        throw DataError("GET " + url + " returned HTTP " + std::to_string(res->status));

      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(res->body);
      } catch (const nlohmann::json::parse_error&) {
        throw DataError("malformed JSON from " + url);
      }
      if (!doc.is_array() || doc.empty() || !doc[0].is_object())
        throw DataError("malformed World Bank envelope from " + url);
      const auto& meta = doc[0];
      if (meta.contains("message"))
        throw DataError("World Bank API error from " + url + ": " + meta["message"].dump());
      if (doc.size() < 2) throw DataError("malformed World Bank envelope (no data array) from " + url);
      pages = detail::envelope_int(detail::envelope_field(meta, "pages", url), url);

      const auto& data = doc[1];
      if (data.is_null()) continue;
      if (!data.is_array()) throw DataError("malformed World Bank envelope (data not an array) from " + url);
      for (const auto& row : data) {
        if (!row.is_object() || !row.contains("value") || !row.contains("date"))
          throw DataError("malformed World Bank record from " + url);
        if (row["value"].is_null()) continue;
        if (!row["value"].is_number()) throw DataError("non-numeric value in World Bank record from " + url);
        IndicatorRecord rec;
        rec.indicator = known->second.indicator;
        rec.value = row["value"].get<double>() * known->second.scale;
        rec.year = static_cast<int>(detail::envelope_int(row["date"], url));
        if (row.contains("countryiso3code") && row["countryiso3code"].is_string())
          rec.country = row["countryiso3code"].get<std::string>();
        if (!is_iso3(rec.country)) throw DataError("World Bank record without an ISO3 country from " + url);
        out.push_back(rec);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gravity
