#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qtree {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by the zero polynomial") {}
};

class NotDivisible : public Error {
 public:
  NotDivisible() : Error("polynomial is not exactly divisible") {}
};

class ZeroInput : public Error {
 public:
  explicit ZeroInput(const std::string& what) : Error(what) {}
};

/// Malformed tree text. `offset` is the byte position where parsing failed.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& msg)
      : Error("parse error at offset " + std::to_string(offset) + ": " + msg),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class ZeroDelay : public ParseError {
 public:
  explicit ZeroDelay(std::size_t offset) : ParseError(offset, "delay must be positive") {}
};

class InvalidAddress : public Error {
 public:
  explicit InvalidAddress(const std::string& addr) : Error("invalid vertex address '" + addr + "'") {}
};

class NotALeaf : public Error {
 public:
  explicit NotALeaf(const std::string& addr) : Error("vertex '" + addr + "' is not a leaf") {}
};

class EmptyInput : public Error {
 public:
  explicit EmptyInput(const std::string& what) : Error(what) {}
};

class RootHasNoEdge : public Error {
 public:
  RootHasNoEdge() : Error("the root has no parent edge") {}
};

class BoundExceeded : public Error {
 public:
  BoundExceeded(std::size_t requested, std::size_t bound)
      : Error("size " + std::to_string(requested) + " exceeds bound " + std::to_string(bound)),
        requested_(requested),
        bound_(bound) {}
  std::size_t requested() const { return requested_; }
  std::size_t bound() const { return bound_; }

 private:
  std::size_t requested_;
  std::size_t bound_;
};

class InadmissibleDelays : public Error {
 public:
  explicit InadmissibleDelays(const std::string& what) : Error(what) {}
};

class IndexOutOfRange : public Error {
 public:
  IndexOutOfRange(std::size_t index, std::size_t count)
      : Error("leaf index " + std::to_string(index) + " out of range (" + std::to_string(count) +
              " leaves)") {}
};

class NoFacesOnPoint : public Error {
 public:
  NoFacesOnPoint() : Error("the one-point tree has no faces") {}
};

}  // namespace qtree
