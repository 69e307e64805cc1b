#pragma once

#include <stdexcept>
#include <string>

namespace hmz {

// Argument lies outside the mathematical domain of the function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Argument too close to the simple pole of zeta at s = 1.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// a + b vanishes (or the quotient overflows) inside a harmonic mean.
// Grid scans treat this as a skippable singular point.
class HarmonicMeanPole : public DomainError {
 public:
  HarmonicMeanPole() : DomainError("harmonic mean pole") {}
  explicit HarmonicMeanPole(const std::string& where)
      : DomainError("harmonic mean pole in " + where) {}
};

// Derivative order or table index beyond what is implemented.
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Unknown claim ids, expression names or polynomial ids.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Root bracket without a sign change.
class BracketError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Interval endpoint remains a root after perturbation retries.
class EndpointRootError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Sign certification contradicted (roots present or wrong sign).
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hmz
