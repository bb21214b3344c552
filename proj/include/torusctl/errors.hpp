#pragma once

#include <stdexcept>
#include <string>

namespace torusctl {

/// Invalid run configuration (CLI maps this to exit code 2).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerically singular or ill-conditioned solve (CLI maps this to exit code 3).
class ConditioningError : public std::runtime_error {
 public:
  ConditioningError(const std::string& what, double condition_number)
      : std::runtime_error(what), condition_number_(condition_number) {}

  double condition_number() const { return condition_number_; }

 private:
  double condition_number_;
};

}  // namespace torusctl
