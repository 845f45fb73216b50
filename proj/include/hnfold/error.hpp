#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hnfold {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A letter outside the alphabet, or two objects over different alphabets.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column),
        detail_(what) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  /// The message without the position prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

class EmptyPresentation : public Error {
 public:
  EmptyPresentation() : Error("presentation has no non-empty generators") {}
};

class NotStronglyConnected : public Error {
 public:
  NotStronglyConnected() : Error("graph is not strongly connected") {}
};

class ClassCountUnavailable : public Error {
 public:
  ClassCountUnavailable()
      : Error("degree-3 class counts need an alphabet of rank 2") {}
};

class TrivialFolding : public Error {
 public:
  TrivialFolding() : Error("folding of the trivial subgroup has no edges") {}
};

/// An internal invariant failed; indicates a bug rather than bad input.
class LogicError : public Error {
 public:
  using Error::Error;
};

}  // namespace hnfold
