#ifndef HILBSMOOTH_ERROR_HPP
#define HILBSMOOTH_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hilbsmooth {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
  using Error::Error;
};

class EmptyInput : public Error {
public:
  using Error::Error;
};

/// A member's divisor is missing from the set.
class NotDivisionClosed : public Error {
public:
  using Error::Error;
};

class InfiniteColength : public Error {
public:
  using Error::Error;
};

class NotAntichain : public Error {
public:
  using Error::Error;
};

class NothingAtHeight : public Error {
public:
  using Error::Error;
};

class WidthTooSmall : public Error {
public:
  using Error::Error;
};

class TailInBeta : public Error {
public:
  using Error::Error;
};

class HeadNotInBeta : public Error {
public:
  using Error::Error;
};

class NotStandardFor : public Error {
public:
  using Error::Error;
};

class NotAdvanceable : public Error {
public:
  using Error::Error;
};

class WrongArity : public Error {
public:
  using Error::Error;
};

class NonInjectiveSequence : public Error {
public:
  using Error::Error;
};

class ZeroParameter : public Error {
public:
  using Error::Error;
};

/// Fires only when an algorithm breaks one of its own postconditions.
class InternalInvariantViolation : public Error {
public:
  using Error::Error;
};

/// Staircase file parse failure; `line()` is 1-based.
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

} // namespace hilbsmooth

#endif
