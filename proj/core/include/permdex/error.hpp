#pragma once

#include <stdexcept>
#include <string>

namespace permdex {

enum class ErrorKind {
  usage,       // bad arguments to an operation
  format,      // unreadable matrix input
  key_format,  // malformed PDXK key
  constraint,  // divisibility, width, or range violation
  decode,      // compound does not decode under this key
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorKind::usage, what) {}
};

class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what) : Error(ErrorKind::format, what) {}
};

class KeyFormatError : public Error {
 public:
  explicit KeyFormatError(const std::string& what)
      : Error(ErrorKind::key_format, what) {}
};

class ConstraintError : public Error {
 public:
  explicit ConstraintError(const std::string& what)
      : Error(ErrorKind::constraint, what) {}
};

class DecodeError : public Error {
 public:
  explicit DecodeError(const std::string& what) : Error(ErrorKind::decode, what) {}
};

}  // namespace permdex
