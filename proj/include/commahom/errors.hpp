#pragma once

#include <stdexcept>
#include <string>

namespace commahom {

/// Base of every error raised by the library. Budget-type failures derive
/// from `Undecided` so callers can map them to an "unknown" verdict.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class MalformedPath : public Error {
 public:
  using Error::Error;
};

class NonAdmissible : public Error {
 public:
  using Error::Error;
};

class UnknownVertex : public Error {
 public:
  using Error::Error;
};

class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidRep : public Error {
 public:
  using Error::Error;
};

class InvalidPhi : public Error {
 public:
  using Error::Error;
};

class HypothesisFailed : public Error {
 public:
  using Error::Error;
};

class PostconditionFailed : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& file, int line, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Neither a positive nor a negative certificate was found within budget.
class Undecided : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Undecided {
 public:
  using Undecided::Undecided;
};

class ClassCountExceeded : public Undecided {
 public:
  using Undecided::Undecided;
};

class IterationCapExceeded : public Undecided {
 public:
  using Undecided::Undecided;
};

class NotGorensteinWithinBudget : public Undecided {
 public:
  using Undecided::Undecided;
};

}  // namespace commahom
