#pragma once

#include <stdexcept>
#include <string>

namespace localmds {

/// Thrown when an exact search or solver refuses an input above its
/// configured size cap. A refusal is never a wrong answer.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Base type for "round budget exhausted" engine errors; the templated
/// derived type in local_sim.hpp carries the partial transcript.
struct MaxRoundsError : std::runtime_error {
  explicit MaxRoundsError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace localmds
