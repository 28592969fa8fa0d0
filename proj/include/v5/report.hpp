#pragma once

#include <string>
#include <vector>

namespace v5 {

/// One verified identity in an integer divisor lattice, with both sides
/// rendered for the report.
struct LatticeIdentity {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool holds = false;
};

}  // namespace v5
