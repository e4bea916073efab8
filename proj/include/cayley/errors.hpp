#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

/// Enumeration or matrix size went past a configured cap (CLI exit 3).
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// An internal mathematical consistency check failed (CLI exit 4).
struct VerificationError : std::logic_error {
  explicit VerificationError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cayley
