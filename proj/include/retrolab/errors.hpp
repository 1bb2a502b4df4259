#pragma once

#include <stdexcept>
#include <string>

namespace rlab {

enum class ErrorKind {
  config,              // bad key, bad value, violated lattice invariant
  invalid_argument,    // size/time-label mismatches between objects
  degenerate_channel,  // |<f|i>| below the overlap floor
  causal,              // null/spacelike/past-pointing current where timelike required
  stagnation,          // |j0| below the stagnation floor along a trajectory
  sampling,            // negative or vanishing density handed to the sampler
  io,                  // unwritable path, unreadable file
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace rlab
