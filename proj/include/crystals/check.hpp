#pragma once

#include <string>
#include <utility>

namespace crystals {

/// Outcome of a verifier: either success, or the first violation found.
struct Check {
  bool ok = true;
  std::string witness;

  static Check pass() { return {}; }
  static Check fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

}  // namespace crystals
