#pragma once

#include <stdexcept>
#include <string>

namespace medianvote {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GraphError : public Error {
 public:
  using Error::Error;
};

class ProfileError : public Error {
 public:
  using Error::Error;
};

// Raised by the text/JSON readers; carries the 1-based line of the fault
// (0 when the fault is not tied to a line).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace medianvote
