#ifndef ULGCOX_ERRORS_HPP
#define ULGCOX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ulg {

// Malformed diagram/word/label input. Message names the offending token.
struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Diagram or polynomial file could not be parsed.
struct ParseError : std::runtime_error {
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_number(line) {}
  std::size_t line_number;
};

// A matrix entry left the checked integer range. Never silent.
struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

// An enumeration or census hit its configured budget. Carries how far we got.
struct ResourceError : std::runtime_error {
  ResourceError(const std::string& what, std::uint64_t reached_)
      : std::runtime_error(what), reached(reached_) {}
  std::uint64_t reached;
};

// Operation requires state the object does not have (e.g. a complete census).
struct InvalidState : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace ulg

#endif
