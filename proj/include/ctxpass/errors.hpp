#pragma once

#include <stdexcept>
#include <string>

namespace ctxpass {

// Caller misuse: bad arguments, violated preconditions. CLI exit code 1.
class UsageError : public std::runtime_error {
public:
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad input data or I/O failure. CLI exit code 2.
class DataError : public std::runtime_error {
public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed structured document; carries the byte offset of the failure.
class ParseError : public DataError {
public:
  ParseError(const std::string& msg, std::size_t byte_offset)
      : DataError(msg), byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

private:
  std::size_t byte_offset_ = 0;
};

// Well-formed document that violates the schema; carries the field name.
class SchemaError : public DataError {
public:
  SchemaError(std::string field, const std::string& msg)
      : DataError(msg), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

private:
  std::string field_;
};

class DateError : public DataError {
public:
  explicit DateError(const std::string& msg) : DataError(msg) {}
};

// Prompt rendering hit an unbound required placeholder.
class RenderError : public DataError {
public:
  explicit RenderError(const std::string& msg) : DataError(msg) {}
};

// LLM client failure (missing scripted reply, child process error, ...).
class ClientError : public DataError {
public:
  explicit ClientError(const std::string& msg) : DataError(msg) {}
};

}  // namespace ctxpass
