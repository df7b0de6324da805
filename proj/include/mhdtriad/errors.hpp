#pragma once

#include <stdexcept>
#include <string>

namespace mhdtriad {

/// Argument outside the admissible region of a formula (1 - b*rho <= 0, b >= 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Characteristic speeds coincide, so an eigenvector basis or a coefficient is undefined.
class DegenerateBackground : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// L_j . M_d R_j is not zero, so the dispersion vector P_j has no solution.
class SolvabilityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GridMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Non-finite values appeared during time stepping.
class BlowUp : public std::runtime_error {
 public:
  BlowUp(const std::string& what, double time) : std::runtime_error(what), time_(time) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

class NoConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A threshold was never crossed within the recorded run.
class NotReached : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An output file could not be written or an input file could not be read.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mhdtriad
