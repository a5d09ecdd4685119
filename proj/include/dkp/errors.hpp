#pragma once

#include <stdexcept>
#include <string>

namespace dkp {

/// Bad quantum numbers, parameters or indices.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operator produced a negative half-power of x, i.e. a function that is
/// singular at the origin and therefore outside the GaussPoly class.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// epsilon^2 == k^2: the coupling ratio vanishes and (F, G) cannot be inverted.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coefficient matching found no regular preimage for a first-order operator.
class ReconstructionError : public std::runtime_error {
 public:
  ReconstructionError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Finite-difference eigenvalues did not converge between N and 2N.
class AccuracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dkp
