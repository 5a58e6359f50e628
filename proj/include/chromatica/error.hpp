#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chromatica {

enum class ErrorKind {
  InvalidArgument,  // bad parameters or malformed input data
  Parse,            // positioned file-format error
  Structural,       // input is well formed but the requested operation is undefined on it
  Network,          // transport failure
  NotFound,         // remote service has no such object
  NotCached,        // offline mode without a cache entry
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(ErrorKind::InvalidArgument, what) {}
};

class StructuralError : public Error {
 public:
  explicit StructuralError(const std::string& what) : Error(ErrorKind::Structural, what) {}
};

/// Parse failure carrying a 1-based line and column (column 0 when the
/// format is not line oriented and `column` is a byte offset instead).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorKind::Parse, format(line, column, message)),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  static std::string format(std::size_t line, std::size_t column, const std::string& message) {
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

class NetworkError : public Error {
 public:
  explicit NetworkError(const std::string& what) : Error(ErrorKind::Network, what) {}
};

class NotFoundError : public Error {
 public:
  explicit NotFoundError(const std::string& what) : Error(ErrorKind::NotFound, what) {}
};

class NotCachedError : public Error {
 public:
  explicit NotCachedError(const std::string& what) : Error(ErrorKind::NotCached, what) {}
};

}  // namespace chromatica
