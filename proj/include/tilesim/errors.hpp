#pragma once

#include <stdexcept>
#include <string>

namespace tilesim {

// Error in a textual input file (circuit or cost-model). Carries the
// 1-based line and column of the offending token when known.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string message, int line = 0, int column = 0)
      : std::runtime_error(format(message, line, column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  static std::string format(const std::string& message, int line, int column) {
    if (line <= 0)
      return message;
    std::string out = "line " + std::to_string(line);
    if (column > 0)
      out += ", column " + std::to_string(column);
    return out + ": " + message;
  }

  int line_;
  int column_;
};

// Invalid configuration (bad flag values, incompatible options, resource
// limits detected before any work starts).
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& message)
      : std::runtime_error(message) {}
};

// Failure while simulating (allocation, kernel contract violations).
class SimError : public std::runtime_error {
public:
  explicit SimError(const std::string& message)
      : std::runtime_error(message) {}
};

} // namespace tilesim
