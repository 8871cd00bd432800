#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace settune {

enum class ErrorKind {
  parse,      // malformed textual input (ratio, note, set expression, JSON)
  domain,     // well-formed input outside an operation's domain
  io,         // file could not be read or written
  invariant,  // a produced table or document breaks its own invariants
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Syntax error. `token()` is the offending piece of input, verbatim.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string token)
      : Error(ErrorKind::parse, message + ": '" + token + "'"),
        token_(std::move(token)) {}

  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message)
      : Error(ErrorKind::domain, message) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error(ErrorKind::io, message) {}
};

class InvariantError : public Error {
 public:
  explicit InvariantError(const std::string& message)
      : Error(ErrorKind::invariant, message) {}
};

}  // namespace settune
