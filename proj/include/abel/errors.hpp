#pragma once

#include <stdexcept>
#include <string>

namespace abel {

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A trigonometric polynomial with nonzero mean has no periodic primitive.
class NonZeroMeanError : public Error {
public:
  using Error::Error;
};

/// Operation is only defined for the other system kind.
class InvalidKindError : public Error {
public:
  using Error::Error;
};

/// Requested composition-factor degree does not divide the polynomial degree.
class DegreeMismatchError : public Error {
public:
  using Error::Error;
};

/// Sign changes of the zero polynomial are undefined.
class ZeroPolynomialError : public Error {
public:
  using Error::Error;
};

/// Argument outside the function's domain.
class DomainError : public Error {
public:
  using Error::Error;
};

/// A hypothesis of the moment-propagation criterion does not hold.
class HypothesisFailedError : public Error {
public:
  HypothesisFailedError(std::string hypothesis, const std::string& detail)
      : Error("hypothesis failed: " + hypothesis + ": " + detail),
        hypothesis_(std::move(hypothesis)) {}

  const std::string& hypothesis() const { return hypothesis_; }

private:
  std::string hypothesis_;
};

/// Numeric solution escaped toward the pole of the underlying integral equation.
class BlowUpError : public Error {
public:
  using Error::Error;
};

/// Adaptive step size underflowed (or the step budget ran out).
class StepFailureError : public Error {
public:
  using Error::Error;
};

/// Symbolic and numeric center diagnostics disagree.
class MismatchError : public Error {
public:
  using Error::Error;
};

}  // namespace abel
