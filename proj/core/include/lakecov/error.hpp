#pragma once

#include <stdexcept>
#include <string>

namespace lakecov {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Value kind or schema violation.
class TypeError : public Error {
 public:
  explicit TypeError(const std::string& msg) : Error(msg) {}
};

// Missing store object, unknown column, absent index.
class NotFoundError : public Error {
 public:
  explicit NotFoundError(const std::string& msg) : Error(msg) {}
};

// Precondition violated by the caller.
class ContractError : public Error {
 public:
  explicit ContractError(const std::string& msg) : Error(msg) {}
};

// Malformed persisted bytes (TSV rows, config lines, raw variant input).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Predicate shape the cache cannot represent as one interval box.
class NotCacheableError : public Error {
 public:
  explicit NotCacheableError(const std::string& msg) : Error(msg) {}
};

// Two execution paths disagreed on query results; always a bug, never a
// recoverable condition.
class CorrectnessError : public Error {
 public:
  explicit CorrectnessError(const std::string& msg) : Error(msg) {}
};

}  // namespace lakecov
