#ifndef EFFSPEC_ERROR_HPP
#define EFFSPEC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace effspec {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit the operation (non-square, size mismatch, index out of range).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A value lies outside the domain of the operation (negative scaling, non-finite entry, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A stated precondition of a verdict does not hold for the given operands.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive subset enumeration refused because the dimension exceeds the cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t n, std::size_t cap)
      : Error("dimension " + std::to_string(n) + " exceeds enumeration cap " +
              std::to_string(cap)),
        n_(n),
        cap_(cap) {}

  std::size_t dimension() const noexcept { return n_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t n_;
  std::size_t cap_;
};

/// An iterative numerical kernel failed to converge.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A file could not be opened or read.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed matrix text.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace effspec

#endif  // EFFSPEC_ERROR_HPP
