#ifndef PARKSIM_ERRORS_HPP
#define PARKSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace parksim {

// Invalid distribution/config parameters, x outside a function's domain.
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A moment or intermediate product left the range of double.
class NonFiniteMomentError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Moment-matching solver ran out of iterations; carries the last residuals.
class FitError : public std::runtime_error {
public:
  FitError(const std::string& what, double residual1, double residual2)
      : std::runtime_error(what), residual_eq3(residual1), residual_eq4(residual2) {}
  double residual_eq3 = 0.0;
  double residual_eq4 = 0.0;
};

// The count-model series did not settle within j_max, or cancellation ate
// the significant digits. Carries what was summed so far.
class SeriesDivergenceError : public std::runtime_error {
public:
  SeriesDivergenceError(const std::string& what, double partial, double last_term_magnitude)
      : std::runtime_error(what), partial_sum(partial), last_term(last_term_magnitude) {}
  double partial_sum = 0.0;
  double last_term = 0.0;
};

// Scenario/topology misconfiguration detected before a run starts.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace parksim

#endif
