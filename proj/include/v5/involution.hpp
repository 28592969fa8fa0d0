#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "v5/projective.hpp"
#include "v5/report.hpp"
#include "v5/ternary.hpp"
#include "v5/vsp.hpp"

namespace v5 {

/// Base scheme of a standard quadratic involution of the plane: a length-3
/// scheme, optionally accompanied by generators of the net of conics through
/// it (used for a length cross-check when present).
struct InvolutionBaseScheme {
  LengthThreeScheme scheme;
  std::optional<std::vector<TernaryForm>> net;
};

/// The three involution types, by the shape of the base scheme:
/// three non-collinear points / a double point plus a point / one
/// curvilinear triple point.
enum class InvolutionType { I, II, III };

/// Classifies the base scheme.  A reduced scheme must be non-collinear
/// (determinant test); collinear triples are rejected as "not a
/// quadratic-involution base scheme".  When a net is supplied, each
/// generator must be a conic and the net must cut a scheme of length 3
/// (checked at degrees 3 and 4).
InvolutionType classify_base_scheme(const InvolutionBaseScheme& z);

/// Exact verification report for the divisor-lattice identities of the
/// Type I involution on the blow-up of the plane at three non-collinear
/// points.  Vectors are written in the basis (H, e1, e2, e3) with pairing
/// diag(1, -1, -1, -1); e'_1 is the class of the line through p2, p3,
/// cyclically.
struct TypeIReport {
  std::array<long, 4> e;
  std::array<long, 4> e_prime;
  std::array<long, 4> canonical;
  std::vector<LatticeIdentity> identities;
  bool all_hold = false;
};

/// Builds the blow-up lattice for three non-collinear rational points and
/// checks the Type I identities: K = -(e+e'), (2e+e')/3 = H,
/// (e+2e')/3 = 2H-e, each (e'_i)^2 = -1, K^2 = 6, and e.e' = 6.
/// The points enter only through the non-collinearity requirement.
TypeIReport typeI_lattice_verify(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3);

}  // namespace v5
