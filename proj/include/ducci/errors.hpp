#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ducci {

/// Base for all domain-rule violations. The CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tuple length or modulus outside the supported range.
class InvalidDimensions : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Two tuples with different length or modulus were combined.
class ShapeMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An even-length-only operation was applied to an odd-length tuple.
class OddLength : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Predecessor construction requested for a tuple that has none.
class NoPredecessor : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A prime was required and the argument is composite (or < 2).
class NotPrime : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A stated hypothesis of a lemma/fact check does not hold for the inputs.
class PreconditionViolated : public DomainError {
 public:
  using DomainError::DomainError;
};

/// No length formula is available for odd n with odd m.
class UnsupportedOddN : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed tuple text or record file content.
class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Result file could not be opened or written.
class OutputUnwritable : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An orbit outran its iteration or state budget. Carries the number of
/// steps performed; no partial len/per is ever reported as exact.
class BudgetExceeded : public DomainError {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t steps)
      : DomainError(what), steps_used(steps) {}

  std::uint64_t steps_used;
};

}  // namespace ducci
