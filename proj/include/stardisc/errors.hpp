#pragma once

#include <stdexcept>
#include <string>

namespace stardisc {

/// Malformed or out-of-range arguments (bad q, mismatched dimensions, ...).
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation would exceed the configured work budget.
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The constant chain is only defined for N >= 32 (s + ln(1/(1-q))).
class regime_error : public std::domain_error {
 public:
  regime_error(const std::string& what, double threshold)
      : std::domain_error(what), threshold_(threshold) {}

  double threshold() const noexcept { return threshold_; }

 private:
  double threshold_;
};

}  // namespace stardisc
