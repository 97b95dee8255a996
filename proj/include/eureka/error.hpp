#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eureka {

// Base for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A letter outside the stave alphabet (or the Latin alphabet, for Peter tables).
class AlphabetError : public Error {
 public:
  using Error::Error;
};

class LexiconError : public Error {
 public:
  enum class Kind { syntax, alphabet, drum_range, category, quantity, empty_drum };

  LexiconError(Kind kind, std::size_t line, std::size_t column, const std::string& what)
      : Error(format(line, column, what)), kind_(kind), line_(line), column_(column) {}

  Kind kind() const noexcept { return kind_; }
  // 1-based; 0 when the error is not tied to a line (empty drum).
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(std::size_t line, std::size_t column, const std::string& what) {
    if (line == 0) return what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

class CompileError : public Error {
 public:
  using Error::Error;
};

class MalformedRowError : public Error {
 public:
  using Error::Error;
};

class ScanError : public Error {
 public:
  ScanError(std::size_t furthest, const std::string& what) : Error(what), furthest_(furthest) {}
  // Index of the furthest syllable the scanner could not get past.
  std::size_t furthest() const noexcept { return furthest_; }

 private:
  std::size_t furthest_;
};

class UnknownWordError : public Error {
 public:
  using Error::Error;
};

class MeterValidationError : public Error {
 public:
  using Error::Error;
};

// Raised by pull_lever() when the driving weight has fully dropped.
class NeedsWinding : public Error {
 public:
  NeedsWinding() : Error("machine needs winding") {}
};

class PhaseError : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class PeterError : public Error {
 public:
  using Error::Error;
};

class CascadeError : public Error {
 public:
  using Error::Error;
};

}  // namespace eureka
