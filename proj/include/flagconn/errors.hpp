#pragma once

#include <stdexcept>
#include <string>

namespace flagconn {

/// Invalid user-facing configuration: unknown family, rank below the family
/// minimum, missing or nonpositive metric coefficients.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Coordinate or vector length mismatch.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the domain of an operation (e.g. a vector that is not a root).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A Lie algebra element that should lie in the compact real form does not.
class RepresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The four candidate pairs of canonical_pair degenerate (alpha = +-beta).
class UndefinedPairError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace flagconn
