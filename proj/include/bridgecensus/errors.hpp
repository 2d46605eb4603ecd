#ifndef BRIDGECENSUS_ERRORS_HPP
#define BRIDGECENSUS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bridgecensus {

enum class ErrorKind {
  UndefinedValue,   // continued fraction has no value (matrix is singular in the relevant entry)
  OutOfRange,       // argument outside the documented domain
  MalformedInput,   // structurally invalid input (unparseable, bad leading entry, ...)
  IsLink,           // even denominator: a 2-bridge link, not a knot
  Trivial,          // denominator 1: the unknot
  BudgetExceeded,   // enumeration would exceed the configured expansion budget
  Internal          // broken internal invariant; always a bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace bridgecensus

#endif  // BRIDGECENSUS_ERRORS_HPP
