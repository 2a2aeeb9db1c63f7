#pragma once

#include <stdexcept>
#include <string>

namespace esgb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The Gauss-Bonnet denominator fell below the configured floor, so the
/// solved-for dH/dt is not trustworthy. Only happens off the constraint surface.
class DenominatorTooSmall : public Error {
 public:
  using Error::Error;
};

class ZeroHubble : public Error {
 public:
  using Error::Error;
};

class DegenerateDenominator : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// A bound was requested outside the time range its theorem covers.
class ModeRangeError : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class MalformedCsv : public Error {
 public:
  using Error::Error;
};

class UnknownColumn : public Error {
 public:
  using Error::Error;
};

}  // namespace esgb
