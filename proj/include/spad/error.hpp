#pragma once
#include <stdexcept>

namespace spad {

/// Filesystem / OS level failure (open, read, write).
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or corrupted on-disk data: bad version, truncated blob, CRC mismatch.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Structurally valid inputs that do not fit together (kind/checkpoint mismatch,
/// mismatched run counts, shape disagreement between frames).
struct IncompatibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace spad
