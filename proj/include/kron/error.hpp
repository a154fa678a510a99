#pragma once

#include <stdexcept>
#include <string>

namespace kron {

// Precondition / domain violations (bad shapes, non-regular input, ...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computation was declined because a configured bound would be exceeded.
// Never a silent fallback: the message names the offending size and limit.
struct Refusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed external input (JSON, config files, CLI payloads).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace kron
