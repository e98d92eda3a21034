#ifndef HFG_ERROR_HPP
#define HFG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hfg {

/// Base class of every error raised by the library. The CLI maps all of
/// these to exit status 2.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Polynomials or ideals over different variable blocks were combined.
class BlockMismatch : public Error {
public:
  using Error::Error;
};

/// An operation was applied outside its mathematical domain, e.g. a Hadamard
/// transform by a point with a zero coordinate.
class DomainError : public Error {
public:
  using Error::Error;
};

/// A Groebner or rank computation would exceed the configured work budget.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

/// Grid construction inputs violate the fat grid assumptions.
class InvalidGrid : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace hfg

#endif
