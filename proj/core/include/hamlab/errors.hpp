#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hamlab {

/// Malformed graph6 input. `offset` is the byte position within the line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// An exact search hit its enumeration cap. Callers must treat the result
/// as unknown, never as a verdict.
class UndecidedError : public std::runtime_error {
 public:
  explicit UndecidedError(const std::string& message)
      : std::runtime_error(message) {}
};

}  // namespace hamlab
