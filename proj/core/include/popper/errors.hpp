#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace popper {

// Base class for everything this library throws. Incoherent suppositions are
// values (the abnormal state), never exceptions.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed formula text. Carries the byte offset of the offending token and
// the set of tokens that would have been accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected,
             const std::string& what)
      : Error(what), position_(position), expected_(std::move(expected)) {}

  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

// A formula referenced an atom the model does not declare.
class UnknownAtomError : public Error {
 public:
  explicit UnknownAtomError(const std::string& atom)
      : Error("unknown atom '" + atom + "'"), atom_(atom) {}

  const std::string& atom() const { return atom_; }

 private:
  std::string atom_;
};

// Invalid model data: overlapping rank supports, bad weight sums, unknown or
// duplicate worlds, malformed model files, invalid conditional tables.
class ModelError : public Error {
 public:
  using Error::Error;
};

// An operation with a configured universe-size bound was asked to exceed it.
class BoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace popper
