#pragma once

#include <stdexcept>
#include <string>

namespace capt {

// Bad flags, malformed configuration IDs, unsupported language tags.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Problems with input data: missing corpus roots, unparseable snippets
// passed where a clean parse is required, missing vectors.
struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Broken internal contracts (e.g. a scope map that does not cover an
// identifier leaf). Indicates a bug, not bad input.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace capt
