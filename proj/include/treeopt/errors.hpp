#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treeopt {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (graph6, edge lists). Carries the byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

class UnsupportedSize : public Error {
 public:
  using Error::Error;
};

/// Enumeration request exceeds the configured caps.
class CapsRefusal : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Never caused by valid input.
class InternalFault : public Error {
 public:
  using Error::Error;
};

}  // namespace treeopt
