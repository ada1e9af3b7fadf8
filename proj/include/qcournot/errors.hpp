#pragma once

#include <stdexcept>

namespace qcournot {

// Squared amplitudes do not sum to one within the requested tolerance.
class NormalizationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Two objects that must agree in dimension (state vs. observable, state vs.
// oracle, amplitude list vs. strategy space) do not.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qcournot
