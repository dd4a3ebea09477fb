#pragma once

#include <stdexcept>
#include <string>

namespace hca {

/// Malformed input: bad vertex ids, loops, unparsable files, violated
/// preconditions on user-supplied data.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A desk-scale bound (vertex count, clique count, search size) was exceeded.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A catalog entry that only exists as a figure was requested but no
/// transcription file has been loaded.
class UntranscribedFigureGraph : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal self-check failed. Never expected; signals a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hca
