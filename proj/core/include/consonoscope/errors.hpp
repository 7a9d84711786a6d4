#pragma once

#include <stdexcept>
#include <string>

namespace consonoscope {

// Caller passed something the operation does not accept (empty list, bad
// index, unknown format, invalid configuration value).
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Argument outside the mathematical domain (nonpositive frequency, negative gap).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A harmonic spectrum lost every partial to the hearing-band filter.
class EmptySpectrumError : public std::runtime_error {
 public:
  explicit EmptySpectrumError(const std::string& what) : std::runtime_error(what) {}
};

// Correlation of a constant buffer.
class UndefinedCorrelationError : public std::runtime_error {
 public:
  explicit UndefinedCorrelationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace consonoscope
