#pragma once

#include <boost/tokenizer.hpp>

#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "gravity/errors.hpp"

namespace gravity {

/// A header-checked CSV file held as strings. Quoted fields may contain
/// commas; embedded quotes and line breaks are not supported on input.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;  // 1-based source line of each row
  std::map<std::string, std::size_t> index;

  const std::string& field(std::size_t row, const std::string& column) const {
    return rows[row][index.at(column)];
  }
};

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line, std::size_t line_no) {
  using Sep = boost::escaped_list_separator<char>;
  try {
    boost::tokenizer<Sep> tok(line, Sep('\\', ',', '"'));
    return {tok.begin(), tok.end()};
  } catch (const boost::escaped_list_error& e) {
    throw DataError("line " + std::to_string(line_no) + ": malformed CSV (" + e.what() + ")");
  }
}

}  // namespace detail

/// Reads a CSV stream whose header must contain every name in `required`.
inline CsvTable read_csv(std::istream& in, const std::vector<std::string>& required,
                         const std::string& source = "input") {
  CsvTable t;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    auto fields = detail::split_csv_line(line, line_no);
    if (t.header.empty()) {
      t.header = std::move(fields);
      for (std::size_t i = 0; i < t.header.size(); ++i) t.index[t.header[i]] = i;
      continue;
    }
    if (fields.size() != t.header.size()) {
      throw DataError(source + " line " + std::to_string(line_no) + ": expected " +
                      std::to_string(t.header.size()) + " fields, found " +
                      std::to_string(fields.size()));
    }
    t.rows.push_back(std::move(fields));
    t.line_numbers.push_back(line_no);
  }
  if (t.header.empty()) throw DataError(source + ": empty file, header row required");
  for (const auto& col : required) {
    if (!t.index.count(col)) throw DataError(source + ": missing column '" + col + "'");
  }
  return t;
}

/// Strict number parsing: the whole field must be consumed.
inline double parse_number(const std::string& text, const std::string& column, std::size_t line,
                           const std::string& source = "input") {
  auto fail = [&](const char* what) {
    return DataError(source + " line " + std::to_string(line) + ": " + what + " in column '" +
                     column + "': '" + text + "'");
  };
  if (text.empty()) throw fail("empty value");
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) throw fail("malformed number");
  if (!std::isfinite(v)) throw fail("non-finite number");
  return v;
}

inline int parse_integer(const std::string& text, const std::string& column, std::size_t line,
                         const std::string& source = "input") {
  auto fail = [&](const char* what) {
    return DataError(source + " line " + std::to_string(line) + ": " + what + " in column '" +
                     column + "': '" + text + "'");
  };
  if (text.empty()) throw fail("empty value");
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw fail("malformed integer");
  return v;
}

/// Quotes a field when it holds a comma, quote or line break.
inline std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_escape(fields[i]);
  out << "\n";
}

}  // namespace gravity
