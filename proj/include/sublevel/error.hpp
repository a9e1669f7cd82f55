#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sublevel {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class StructuralError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class MetricError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line ? what + " (line " + std::to_string(line) + ")" : what), line_(line) {}
  explicit ParseError(const std::string& what) : ParseError(what, 0) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace sublevel
