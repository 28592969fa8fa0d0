#pragma once

#include <array>
#include <string>

#include "v5/scalar.hpp"

namespace v5 {

namespace detail {

/// Shared storage for points and lines of P^2: three coordinates, not all
/// zero, held in a canonical representative.  Rational triples normalize to a
/// primitive integer vector whose first nonzero entry is positive; over other
/// fields the first nonzero coordinate is scaled to 1.
class HomVec3 {
 public:
  HomVec3(Scalar x, Scalar y, Scalar z);
  const Scalar& operator[](int i) const;
  const std::array<Scalar, 3>& coords() const { return c_; }
  bool operator==(const HomVec3& o) const { return c_ == o.c_; }
  bool operator!=(const HomVec3& o) const { return !(*this == o); }
  bool is_rational() const;
  std::string str() const;

 protected:
  std::array<Scalar, 3> c_;
};

}  // namespace detail

class ProjPoint : public detail::HomVec3 {
 public:
  ProjPoint(Scalar x, Scalar y, Scalar z) : HomVec3(std::move(x), std::move(y), std::move(z)) {}
  explicit ProjPoint(const std::array<Scalar, 3>& v) : HomVec3(v[0], v[1], v[2]) {}
  /// Coordinate-wise Galois conjugate (identity over Q).
  ProjPoint conj() const;
};

class ProjLine : public detail::HomVec3 {
 public:
  ProjLine(Scalar x, Scalar y, Scalar z) : HomVec3(std::move(x), std::move(y), std::move(z)) {}
  explicit ProjLine(const std::array<Scalar, 3>& v) : HomVec3(v[0], v[1], v[2]) {}
  ProjLine conj() const;
};

/// Raw cross product, no normalization; zero when the inputs are parallel.
std::array<Scalar, 3> cross(const std::array<Scalar, 3>& a, const std::array<Scalar, 3>& b);

/// Line through two distinct points.
ProjLine join_points(const ProjPoint& a, const ProjPoint& b);
/// Intersection of two distinct lines.
ProjPoint meet_lines(const ProjLine& a, const ProjLine& b);
/// Pairing <l, p>; the point lies on the line iff this vanishes.
Scalar incidence(const ProjLine& l, const ProjPoint& p);

}  // namespace v5
