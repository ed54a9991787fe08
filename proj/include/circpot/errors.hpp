#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace circpot {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller-side problems: bad arguments, unresolved grids, degenerate inputs.
// The CLI maps every PreconditionError to exit status 2.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class RangeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class ResolutionError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class DegenerateInputError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class SingularityError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class ConstructionError : public PreconditionError {
 public:
  ConstructionError(const std::string& what, int stage)
      : PreconditionError(what), stage_(stage) {}
  int stage() const { return stage_; }

 private:
  int stage_;
};

// Raised when an iterative solver exhausts its budget. Carries the best
// iterate found so callers can inspect or reuse it.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::vector<double> best_weights,
                   double best_objective, int iterations, double kkt_residual)
      : Error(what),
        best_weights_(std::move(best_weights)),
        best_objective_(best_objective),
        iterations_(iterations),
        kkt_residual_(kkt_residual) {}

  const std::vector<double>& best_weights() const { return best_weights_; }
  double best_objective() const { return best_objective_; }
  int iterations() const { return iterations_; }
  double kkt_residual() const { return kkt_residual_; }

 private:
  std::vector<double> best_weights_;
  double best_objective_;
  int iterations_;
  double kkt_residual_;
};

}  // namespace circpot
