#pragma once

#include <stdexcept>
#include <string>

namespace qcd {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Observation outside the common support of the pre/post densities.
class ModelSupportError : public Error {
 public:
  using Error::Error;
};

// Invalid model or prior parameters (including an indistinguishable f/g pair).
class ModelConfigError : public Error {
 public:
  using Error::Error;
};

// Iterative solver failed to reach its tolerance; carries the last residual.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_ = 0.0;
};

// Renewal-constant estimation refused: the log likelihood ratio is arithmetic.
class ArithmeticLrError : public Error {
 public:
  using Error::Error;
};

// Threshold search could not bracket or converge.
class CalibrationError : public Error {
 public:
  using Error::Error;
};

// An estimate is undefined for the given inputs (e.g. no surviving runs).
class EstimationError : public Error {
 public:
  using Error::Error;
};

// SRP initial distribution was solved for a different threshold.
class ThresholdMismatchError : public Error {
 public:
  using Error::Error;
};

// CLI / experiment configuration is invalid.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcd
