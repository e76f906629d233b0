#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gravity {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid run configuration, model specification or option.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent input data (parsing, joins, panel invariants).
class DataError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure: rank deficiency, degenerate fits, singular matrices.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class RankDeficiencyError : public NumericalError {
 public:
  RankDeficiencyError(const std::string& what, std::vector<std::string> columns)
      : NumericalError(what), columns_(std::move(columns)) {}

  /// Columns detected as linearly dependent on the others.
  const std::vector<std::string>& columns() const noexcept { return columns_; }

 private:
  std::vector<std::string> columns_;
};

}  // namespace gravity
