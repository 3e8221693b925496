#pragma once

#include <stdexcept>
#include <string>

namespace volterra {

/// Argument outside the mathematical domain of an operation (λ ≤ 0, ħ ∉ [0,1], N < 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation hit a pole of the resolvent symbol Λ.
class SingularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Symbols built over different reference quadratic forms were combined.
class CalculusMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input does not have the structure an operation requires.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical solve or fit could not produce a trustworthy answer.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace volterra
