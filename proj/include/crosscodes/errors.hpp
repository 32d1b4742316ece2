#pragma once

#include <stdexcept>
#include <string>

namespace crosscodes {

/** Violated precondition on a construction or operation parameter. */
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/** Requested work exceeds a configured exhaustive-computation budget. */
class BudgetError : public std::invalid_argument {
 public:
  explicit BudgetError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace crosscodes
