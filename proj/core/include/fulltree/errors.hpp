#pragma once

#include <stdexcept>
#include <string>

namespace fulltree {

// Thrown when packed values of different depths are paired, or when a level
// or digit is built at the wrong depth. The depth discipline is what a
// nesting element type would enforce statically; violating it is a bug in
// this library, never a consequence of bad user input.
class DepthMismatchError : public std::logic_error {
 public:
  explicit DepthMismatchError(const std::string& what) : std::logic_error(what) {}
};

// Thrown when full-tree witnesses with different height indices meet where
// equal indices are required.
class HeightMismatchError : public std::logic_error {
 public:
  explicit HeightMismatchError(const std::string& what) : std::logic_error(what) {}
};

// Thrown when the typed reduction loop is handed an empty structure.
class EmptyAplError : public std::logic_error {
 public:
  explicit EmptyAplError(const std::string& what) : std::logic_error(what) {}
};

// Thrown when the brute-force enumerator is asked for more nodes than the
// Catalan blowup allows.
class SizeLimitError : public std::invalid_argument {
 public:
  explicit SizeLimitError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace fulltree
