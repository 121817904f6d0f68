#ifndef TRIGEN_ERRORS_HPP
#define TRIGEN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trigen {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `where` is a 1-based line number or character
/// offset, depending on the reader that raised it.
class ParseError : public Error {
public:
  ParseError(std::string const &what, std::size_t where)
      : Error(what + " (at " + std::to_string(where) + ")"), where_(where) {}

  std::size_t where() const noexcept { return where_; }

private:
  std::size_t where_;
};

class NotRational : public Error {
public:
  using Error::Error;
};

/// A class-algebra constant that failed to reduce to a nonnegative integer.
/// Always means the table data is wrong.
class NotIntegral : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class UnknownClass : public Error {
public:
  using Error::Error;
};

class BoundExceeded : public Error {
public:
  using Error::Error;
};

/// Generators whose group order differs from the table's group order.
class OrderMismatch : public Error {
public:
  using Error::Error;
};

class AmbiguousClasses : public Error {
public:
  using Error::Error;
};

} // namespace trigen

#endif // TRIGEN_ERRORS_HPP
