#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fastia {

/// Invalid parameter or configuration value (maps to CLI exit code 1).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed instance file. Carries the 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  explicit ParseError(const std::string& what) : std::runtime_error(what), line_(0) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Raised when an objective evaluation would exceed the configured budget.
/// Engines catch this to finalise a truncated run record; best-so-far data
/// is already recorded by the evaluation observer at that point.
class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(std::uint64_t budget)
      : std::runtime_error("evaluation budget exhausted (" + std::to_string(budget) + ")"),
        budget_(budget) {}

  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t budget_;
};

}  // namespace fastia
