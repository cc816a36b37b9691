#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ptk {

/// Malformed user input: unknown letters or states, bad files, bad arguments.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Automaton file that does not parse. `line()` is 1-based.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The caller broke a documented precondition, e.g. passed an NFA to an
/// operation that needs a complete DFA.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised by depth() when the automaton has a cycle through two or more states.
class CyclicError : public ContractError {
 public:
  using ContractError::ContractError;
};

/// An explicit size limit was hit. `reached()` is the count at which the
/// computation gave up.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::size_t limit, std::size_t reached)
      : std::runtime_error(what + " (limit " + std::to_string(limit) + ", reached " +
                           std::to_string(reached) + ")"),
        limit_(limit),
        reached_(reached) {}

  std::size_t limit() const noexcept { return limit_; }
  std::size_t reached() const noexcept { return reached_; }

 private:
  std::size_t limit_;
  std::size_t reached_;
};

}  // namespace ptk
