#ifndef MONOIDLAB_ERROR_HPP_
#define MONOIDLAB_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace monoidlab {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: parse failures, invalid tables, bad parameters.
// The CLI maps this to exit code 3.
struct InputError : Error {
  using Error::Error;
};

// A search or closure exceeded its configured budget.
struct BudgetError : Error {
  using Error::Error;
};

}  // namespace monoidlab

#endif  // MONOIDLAB_ERROR_HPP_
