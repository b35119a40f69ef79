#pragma once

#include <stdexcept>
#include <string>

namespace pct {

/// Raised when an operation that is total on valid input fails anyway.
/// Seeing one of these means a bug or corrupted input, never a usage mistake.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error("internal error: " + what) {}
};

}  // namespace pct
