#pragma once

#include <stdexcept>
#include <string>

namespace gmbqc {

// Violated structural invariant (bad observable set, inconsistent action, ...).
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& msg) : std::logic_error(msg) {}
};

// Desk-scale guard tripped (problem too large for exhaustive machinery).
class SizeGuardError : public std::runtime_error {
 public:
  explicit SizeGuardError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace gmbqc
