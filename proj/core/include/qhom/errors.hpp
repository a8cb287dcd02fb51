#pragma once

#include <stdexcept>
#include <string>

namespace qhom {

/// Malformed or invalid algebra spec / module description.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The request lies outside what can be decided exactly, e.g. complete
/// enumeration for a non-Nakayama algebra.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A resolution hit its length cap before the needed degree.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Decomposition could neither split a module nor prove it indecomposable
/// within the retry bound.
class DecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qhom
