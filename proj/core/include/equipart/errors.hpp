#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace equipart {

// Root of every exception the library throws on bad input or a broken
// precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied something unusable: bad text, bad parameters, overlapping
// sets. The CLI maps these to a usage error.
class UsageError : public Error {
 public:
  using Error::Error;
};

// The input violates a mathematical precondition of an algorithm (the graph
// is not planar, not triangle-free, the coloring is not acyclic, ...).
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class MalformedInput : public UsageError {
 public:
  MalformedInput(const std::string& what, std::size_t line, std::size_t offset)
      : UsageError("malformed input at line " + std::to_string(line) +
                   ", offset " + std::to_string(offset) + ": " + what),
        line_(line),
        offset_(offset) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t line_;
  std::size_t offset_;
};

class OverlappingSets : public UsageError {
 public:
  using UsageError::UsageError;
};

class BadParameters : public UsageError {
 public:
  using UsageError::UsageError;
};

class BadSpec : public UsageError {
 public:
  using UsageError::UsageError;
};

class InstanceTooLarge : public UsageError {
 public:
  using UsageError::UsageError;
};

class NoLowDegreeVertex : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

class StructureClaimViolated : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

class RepairFailed : public PreconditionViolation {
 public:
  RepairFailed(const std::string& what, std::size_t step)
      : PreconditionViolation(what), step_(step) {}
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

class InvalidColoring : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

// Raised when an internal postcondition fails. Firing one is a bug in this
// library, never a property of the input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class UnreachableCaseII : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

}  // namespace equipart
