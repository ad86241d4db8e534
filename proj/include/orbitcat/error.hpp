#ifndef ORBITCAT_ERROR_HPP
#define ORBITCAT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace orbitcat
{

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Malformed quiver DSL or object literal.
class ParseError : public Error
{
public:
  ParseError(std::string const &what, int line, int column)
    : Error("line " + std::to_string(line) + ", column " +
            std::to_string(column) + ": " + what),
      line_(line),
      column_(column)
  {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

// Structurally invalid quiver (cycle, multiple arrows, ...).
class QuiverError : public Error
{
public:
  using Error::Error;
};

class NotDynkin : public Error
{
public:
  using Error::Error;
};

class DimensionMismatch : public Error
{
public:
  using Error::Error;
};

// Raised when an internal consistency check fails. Always a bug.
class InvariantViolation : public Error
{
public:
  using Error::Error;
};

class OutOfWindow : public Error
{
public:
  using Error::Error;
};

class WindowTooSmall : public Error
{
public:
  using Error::Error;
};

// Resource caps (path counts, search nodes). Not mathematical failures.
class ResourceError : public Error
{
public:
  using Error::Error;
};

class PathExplosion : public ResourceError
{
public:
  using ResourceError::ResourceError;
};

class SearchBudgetExceeded : public ResourceError
{
public:
  using ResourceError::ResourceError;
};

class UsageError : public Error
{
public:
  using Error::Error;
};

} // namespace orbitcat

#endif // ORBITCAT_ERROR_HPP
