// Error types shared across the library. Everything hard-fails by throwing;
// resource caps get their own type so callers can map them to an explicit
// "inconclusive" outcome instead of a bogus negative result.
#pragma once

#include <stdexcept>
#include <string>

namespace braidquot {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input text (group spec, generator file, presentation file) failed to parse.
struct ParseError : Error {
  using Error::Error;
};

// A closure / search exceeded its element or node budget. Never swallowed:
// callers either re-run with a bigger cap or report "inconclusive".
struct CapExceeded : Error {
  using Error::Error;
};

// A self-check failed (expected order mismatch, relator not holding under
// canonical images, malformed invariant). Indicates bad data, not bad input.
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace braidquot
