#pragma once

#include <cstdint>
#include <string>

namespace ducci {

/// Outcome of an exhaustive identity/fact check. On failure the first
/// counterexample witness is recorded rather than a bare boolean.
struct Report {
  bool pass = true;
  std::string counterexample;  // empty when pass
  std::uint64_t checked = 0;   // instances examined

  explicit operator bool() const { return pass; }
};

}  // namespace ducci
