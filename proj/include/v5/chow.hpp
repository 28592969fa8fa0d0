#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "v5/report.hpp"
#include "v5/scalar.hpp"

namespace v5 {

/// Element of the intersection ring of the projectivization of a rank-2
/// bundle over the plane with Chern numbers (c1, c2), generated by the
/// relative hyperplane class xi and the pulled-back line class A.  Classes
/// are kept in the normal form obtained from the relations
///   A^3 = 0,   xi^2 = c1*xi*A - c2*A^2,
/// so stored monomials have xi-exponent at most 1 and A-exponent at most 2.
/// Degree-3 classes are rational multiples of xi*A^2, whose integral is
/// normalized to 1.
class ChowClass {
 public:
  ChowClass(long c1, long c2) : c1_(c1), c2_(c2) {}

  static ChowClass xi(long c1, long c2);
  static ChowClass hyperplane(long c1, long c2);  // the class A

  long c1() const { return c1_; }
  long c2() const { return c2_; }

  bool is_zero() const { return terms_.empty(); }
  /// Largest total degree among stored monomials; -1 when zero.
  int degree() const;
  /// True when every stored monomial has the given total degree (the zero
  /// class is homogeneous of every degree).
  bool is_homogeneous_of(int d) const;
  /// Coefficient of xi^i * A^j in the normal form.
  Rational coeff(int i, int j) const;
  /// Adds c * xi^i * A^j, reducing to normal form.
  void add_term(int i, int j, const Rational& c);

  ChowClass operator+(const ChowClass& o) const;
  ChowClass operator-(const ChowClass& o) const;
  ChowClass operator-() const;
  ChowClass operator*(const ChowClass& o) const;
  ChowClass scaled(const Rational& c) const;
  bool operator==(const ChowClass& o) const;
  bool operator!=(const ChowClass& o) const { return !(*this == o); }

  /// Integral of a degree-3 class: the coefficient of xi*A^2.  Requires the
  /// class to be zero or homogeneous of degree 3.
  Rational integral() const;

  std::string str() const;

 private:
  void require_same_context(const ChowClass& o) const;

  long c1_, c2_;
  std::map<std::pair<int, int>, Rational> terms_;
};

/// Exact triple intersection number of three degree-1 classes.  Rejects
/// inputs that are not homogeneous of degree 1.
Rational pbundle_intersection(long c1, long c2, const std::array<ChowClass, 3>& classes);

/// The intersection numbers of the double-projection birational diagram:
/// on the bundle side (c1 = -1, c2 = 3) with K = -2 xi - 4 A and
/// Gamma = xi + A, then across the flop (which replaces Gamma^3 by the
/// contracted plane's value) to the degree of the target threefold.
struct SarkisovReport {
  Rational k3;        // K^3
  Rational k2g;       // K^2 . Gamma
  Rational kg2;       // K . Gamma^2
  Rational g3;        // Gamma^3
  Rational gplus3;    // (Gamma^+)^3, after the flop
  Rational ky3;       // K_Y^3 = K^3 - 6 K^2.Gamma + 12 K.Gamma^2 - 8 (Gamma^+)^3
  Rational h3;        // H^3 = K_Y^3 / (-8)
};

SarkisovReport sarkisov_numerology();

/// Divisor bookkeeping for the link through the blow-up of a line, in the
/// rank-2 lattice with basis (q*H, E): the exceptional class of the second
/// contraction, its pushforward, and the exact identity -K_Y = 2 q_* Z'.
struct QuadricLinkReport {
  std::array<long, 2> z_prime;   // coordinates of Z' in (q*H, E)
  std::array<long, 2> q0_prime;  // coordinates of Q0'
  long pushforward_h = 0;        // q_* Z' = (this) * H
  std::vector<LatticeIdentity> identities;
  bool all_hold = false;
};

QuadricLinkReport quadric_link_divisors();

}  // namespace v5
