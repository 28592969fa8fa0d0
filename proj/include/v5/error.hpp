#pragma once

#include <stdexcept>
#include <string>

namespace v5 {

/// Precondition or schema violation: the input does not meet an operation's
/// stated contract.  CLI maps this to exit code 2.
class ContractError : public std::runtime_error {
 public:
  explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

/// The requested decision is not offered over the given field (e.g. conic
/// solvability over a function field).  CLI maps this to exit code 3.
class UnsupportedError : public std::runtime_error {
 public:
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace v5
