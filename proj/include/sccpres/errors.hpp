#pragma once

#include <stdexcept>
#include <string>

namespace sccp {

/// Malformed input: unknown ids, overlapping terminal sets, bad file syntax.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// An exhaustive routine would exceed its configured enumeration budget.
class CapabilityError : public std::runtime_error {
 public:
  explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sccp
