#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace rubin {

/// Malformed text input: cycle notation, clopen/point syntax, element tables.
class parse_error : public std::invalid_argument {
 public:
  explicit parse_error(const std::string& what, int line = 0)
      : std::invalid_argument(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A precondition of a construction does not hold for the given inputs.
class hypothesis_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A bounded search ran to its cap without finding what it looked for.
/// This is never a verdict about the underlying mathematics.
class search_exhausted : public std::runtime_error {
 public:
  search_exhausted(const std::string& what, std::string bound_name, long long bound)
      : std::runtime_error(what), bound_name_(std::move(bound_name)), bound_(bound) {}
  const std::string& bound_name() const noexcept { return bound_name_; }
  long long bound() const noexcept { return bound_; }

 private:
  std::string bound_name_;
  long long bound_;
};

/// A prefix-map table grew past the configured cell budget.
class budget_exceeded : public std::runtime_error {
 public:
  budget_exceeded(const std::string& what, long long budget)
      : std::runtime_error(what), budget_(budget) {}
  long long budget() const noexcept { return budget_; }

 private:
  long long budget_;
};

}  // namespace rubin
