#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace curvchain {

/// Metric parameters that produce a non-positive (or non-finite) hopping.
/// `site()` is the lattice position where the check failed, or -1 when the
/// failure is a parameter check not tied to a position.
class invalid_metric : public std::invalid_argument {
 public:
  invalid_metric(const std::string& what, long site = -1)
      : std::invalid_argument(what), site_(site) {}
  long site() const noexcept { return site_; }

 private:
  long site_;
};

class range_error : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// The eigensolver hit its iteration cap. `index()` is the (0-based) position
/// of the eigenvalue that failed to converge.
class numerical_failure : public std::runtime_error {
 public:
  numerical_failure(const std::string& what, std::size_t index)
      : std::runtime_error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class unsupported_filling : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class fit_failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Config parse/validation failure. `line`/`column` are 1-based; 0 means the
/// error is not tied to a location (e.g. a missing required key).
class config_error : public std::runtime_error {
 public:
  config_error(const std::string& what, int line = 0, int column = 0,
               std::string field = {})
      : std::runtime_error(what),
        line_(line),
        column_(column),
        field_(std::move(field)) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& field() const noexcept { return field_; }

 private:
  int line_;
  int column_;
  std::string field_;
};

}  // namespace curvchain
