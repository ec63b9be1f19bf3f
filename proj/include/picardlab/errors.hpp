#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace picardlab {

// Divisor classes living on different base surfaces were combined.
class IncompatibleClasses : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A parameter violates an operation's or a theorem's stated constraint.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Building data produced inconsistent numerical invariants (odd Euler
// characteristic numerator, negative irregularity).
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A branch singularity configuration matches none of the transport rules.
class TransportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ClassificationError : public std::runtime_error {
 public:
  enum class Kind { JetBoundTooSmall, NonIsolated, BadInput };

  ClassificationError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace picardlab

namespace picardlab {

// A point handed to a local analysis does not lie on the curve.
class PointNotOnCurve : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace picardlab
