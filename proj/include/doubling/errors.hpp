#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace doubling {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Elements of different group kinds were mixed in one computation.
class KindMismatchError : public Error {
public:
  explicit KindMismatchError(const std::string& what) : Error(what) {}
};

/// Input text does not match the element or file schema.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  explicit ParseError(const std::string& what) : Error(what), position_(0) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Free-group comparison: the truncated expansions agree up to the degree cap
/// yet the words differ. Raising the cap may decide the pair.
class OrderUndecidedError : public Error {
public:
  explicit OrderUndecidedError(const std::string& what) : Error(what) {}
};

/// A chain that bi-invariance forces to be strictly ascending was not.
/// Signals a broken order implementation, never bad input.
class InternalOrderViolation : public Error {
public:
  explicit InternalOrderViolation(const std::string& what) : Error(what) {}
};

/// The operation's counting hypothesis does not hold for the given set.
class HypothesisNotMetError : public Error {
public:
  explicit HypothesisNotMetError(const std::string& what) : Error(what) {}
};

/// A conclusion forced by the minimal-doubling lemma failed to hold.
class LemmaViolationError : public Error {
public:
  explicit LemmaViolationError(const std::string& what) : Error(what) {}
};

/// A conclusion forced by one of the structure theorems failed to hold.
/// On a correct order implementation these are unreachable.
class TheoremViolationError : public Error {
public:
  enum class Reason {
    EmptyIntersection,     // a counting argument guarantees a coincidence
    ForcedEqualityFailed,  // a squeezed product equality did not hold
    ExponentNotFound,      // bounded exponent search exhausted
    BoundExceeded,         // recovered exponents exceed the certified bound
    General,
  };

  TheoremViolationError(Reason reason, const std::string& what)
      : Error(what), reason_(reason) {}
  Reason reason() const { return reason_; }

private:
  Reason reason_;
};

/// A witness failed re-verification by plain multiplication.
class VerificationFailedError : public Error {
public:
  explicit VerificationFailedError(const std::string& what) : Error(what) {}
};

/// A configured resource cap was exceeded.
class ResourceCapError : public Error {
public:
  explicit ResourceCapError(const std::string& what) : Error(what) {}
};

/// Ball enumeration would exceed the configured cap.
class BallTooLargeError : public ResourceCapError {
public:
  explicit BallTooLargeError(const std::string& what) : ResourceCapError(what) {}
};

/// Subset enumeration would exceed the configured cap.
class SubsetCapError : public ResourceCapError {
public:
  explicit SubsetCapError(const std::string& what) : ResourceCapError(what) {}
};

/// Two recovery algorithms disagreed on the same set.
class MismatchFoundError : public Error {
public:
  explicit MismatchFoundError(const std::string& what) : Error(what) {}
};

}  // namespace doubling
