#pragma once

#include <stdexcept>
#include <string>

namespace tcplan {

/// Argument outside the documented domain of an operation.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A caller broke a precondition that ties two values together
/// (mismatched path endpoints, missing planner hypotheses, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Point lies outside the chart U_i = {x_i != 0}.
class ChartDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UnsupportedDimension : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace tcplan
