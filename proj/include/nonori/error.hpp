#pragma once

#include <stdexcept>
#include <string>

namespace nonori {

// Raised when an operation is applied outside its domain (bad input, violated
// precondition, or a search that must succeed but did not).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, int line = 0)
      : DomainError(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace nonori
