#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qshelf {

using Exponent = std::int64_t;

/// Base class for every error raised by the library.
class QSeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A comparison or derivation needs coefficients beyond a series' precision.
class InsufficientPrecision : public QSeriesError {
 public:
  using QSeriesError::QSeriesError;
};

/// A series expected to be an ordinary power series carries a nonzero
/// coefficient at a negative exponent. Raised when an exact division fails.
class NegativeExponentResidue : public QSeriesError {
 public:
  NegativeExponentResidue(Exponent exponent, std::string coefficient)
      : QSeriesError("nonzero coefficient " + coefficient + " at negative exponent " +
                     std::to_string(exponent)),
        exponent_(exponent),
        coefficient_(std::move(coefficient)) {}

  Exponent exponent() const noexcept { return exponent_; }
  const std::string& coefficient() const noexcept { return coefficient_; }

 private:
  Exponent exponent_;
  std::string coefficient_;
};

class LowestCoefficientNotUnit : public QSeriesError {
 public:
  using QSeriesError::QSeriesError;
};

class ZeroSeries : public QSeriesError {
 public:
  using QSeriesError::QSeriesError;
};

class DivergentProduct : public QSeriesError {
 public:
  using QSeriesError::QSeriesError;
};

class StabilizationFailure : public QSeriesError {
 public:
  using QSeriesError::QSeriesError;
};

class UnsupportedKind : public QSeriesError {
 public:
  using QSeriesError::QSeriesError;
};

/// Two routes that must produce the same series disagreed.
class IdentityMismatch : public QSeriesError {
 public:
  using QSeriesError::QSeriesError;
};

/// Invalid user-supplied configuration (CLI exit code 2).
class UsageError : public QSeriesError {
 public:
  using QSeriesError::QSeriesError;
};

}  // namespace qshelf
