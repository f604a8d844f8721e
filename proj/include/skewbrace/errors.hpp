#pragma once

#include <stdexcept>
#include <string>

namespace skewbrace {

// Malformed input text or tables (bad dimensions, out-of-range entries,
// unparseable files). line/col are 1-based; -1 means "not applicable".
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& msg, int line = -1, int col = -1)
      : std::runtime_error(decorate(msg, line, col)), line_(line), col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  static std::string decorate(const std::string& msg, int line, int col) {
    std::string prefix;
    if (line >= 0) prefix += "line " + std::to_string(line);
    if (col >= 0) prefix += (prefix.empty() ? "col " : ", col ") + std::to_string(col);
    return prefix.empty() ? msg : prefix + ": " + msg;
  }

  int line_;
  int col_;
};

// A caller violated a documented mathematical precondition
// (e.g. passing a non-ideal where an ideal is required).
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace skewbrace
