#pragma once

#include <stdexcept>

namespace caforge {

// A configured resource bound would be exceeded. The CLI maps this to exit 3.
struct bound_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal invariant failed, e.g. a search that is guaranteed by theory to
// succeed came up empty. Always a bug or a corrupted input, never user error.
struct inconsistency_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace caforge
