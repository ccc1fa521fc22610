#pragma once

#include <stdexcept>
#include <string>

namespace arith {

// Error taxonomy mapped by the CLI to exit codes:
//   parameter_error, range_error  -> 2
//   capacity_error, accuracy_error -> 3
//   numeric_error                  -> 1
class parameter_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class range_error : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested accuracy could not be met; carries the bound actually achieved.
class accuracy_error : public std::runtime_error {
 public:
  accuracy_error(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_bound(achieved) {}
  double achieved_bound;
};

class numeric_error : public std::runtime_error {
 public:
  numeric_error(const std::string& what, double residual = 0.0)
      : std::runtime_error(what), achieved_residual(residual) {}
  double achieved_residual;
};

}  // namespace arith
